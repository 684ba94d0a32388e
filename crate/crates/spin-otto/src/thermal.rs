//! Gibbs-state populations and the X-shaped thermal density matrix.
//!
//! A thermal state of the two-spin substance is diagonal in the energy
//! eigenbasis, and because the Hamiltonian couples only `{|11>, |00>}` and
//! `{|10>, |01>}`, the density matrix in the standard basis always takes the
//! five-parameter X form stored by [`XState`].

use crate::error::{Error, Result};
use crate::spin_model::{spectrum, Spectrum, SubstanceParams};

/// Entry-consistency tolerance used by [`XState::new`].
pub const XSTATE_TOLERANCE: f64 = 1e-12;

pub(crate) fn validate_temperature(temperature: f64) -> Result<()> {
    if !(temperature.is_finite() && temperature > 0.0) {
        return Err(Error::InvalidTemperature(temperature));
    }
    Ok(())
}

/// A working-substance configuration held at a bath temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    params: SubstanceParams,
    temperature: f64,
}

impl ThermalPoint {
    /// Validates `temperature > 0` and finite.
    pub fn new(params: SubstanceParams, temperature: f64) -> Result<Self> {
        validate_temperature(temperature)?;
        Ok(Self {
            params,
            temperature,
        })
    }

    pub fn params(&self) -> SubstanceParams {
        self.params
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn spectrum(&self) -> Spectrum {
        spectrum(self.params)
    }

    /// Gibbs level populations at this point.
    pub fn populations(&self) -> Populations {
        Populations::gibbs(spectrum(self.params).energies(), self.temperature)
    }

    /// Thermal density matrix at this point, in X form.
    pub fn xstate(&self) -> XState {
        let spec = spectrum(self.params);
        xstate_from_parts(&spec, &Populations::gibbs(spec.energies(), self.temperature))
    }
}

/// Gibbs occupation probabilities of the four levels.
///
/// The partition function is kept in an overflow-safe split representation:
/// weights are exponentiated relative to the lowest level, so
/// `log Z = shifted_log_partition_function() - energy_shift()/T` stays
/// finite even when `Z` itself would overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Populations {
    p: [f64; 4],
    shifted_log_z: f64,
    shift: f64,
    temperature: f64,
}

impl Populations {
    /// Gibbs populations for four arbitrary energy levels at temperature `t`.
    pub fn from_levels(energies: &[f64; 4], temperature: f64) -> Result<Self> {
        validate_temperature(temperature)?;
        Ok(Self::gibbs(energies, temperature))
    }

    pub(crate) fn gibbs(energies: &[f64; 4], temperature: f64) -> Self {
        let shift = energies.iter().copied().fold(f64::INFINITY, f64::min);
        let weights = energies.map(|e| (-((e - shift) / temperature)).exp());
        let total: f64 = weights.iter().sum();
        Self {
            p: weights.map(|w| w / total),
            shifted_log_z: total.ln(),
            shift,
            temperature,
        }
    }

    /// Probabilities ordered like the spectrum's levels; they sum to one and
    /// never increase with level energy.
    pub fn probabilities(&self) -> &[f64; 4] {
        &self.p
    }

    /// `ln Z`, reconstructed from the shifted representation.
    pub fn log_partition_function(&self) -> f64 {
        self.shifted_log_z - self.shift / self.temperature
    }

    /// `ln sum_n exp(-(E_n - shift)/T)`, the overflow-safe partial result.
    pub fn shifted_log_partition_function(&self) -> f64 {
        self.shifted_log_z
    }

    /// The energy shift (lowest level) used by the safe representation.
    pub fn energy_shift(&self) -> f64 {
        self.shift
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }
}

/// Gibbs populations of a computed spectrum at temperature `t`.
pub fn populations(spec: &Spectrum, temperature: f64) -> Result<Populations> {
    Populations::from_levels(spec.energies(), temperature)
}

/// The five real parameters of an X-shaped two-qubit density matrix in the
/// basis `{|11>, |10>, |01>, |00>}`: diagonal `(a, b, b, d)` plus the
/// anti-diagonal coherences `w = <11|rho|00>` and `z = <10|rho|01>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    a: f64,
    b: f64,
    d: f64,
    w: f64,
    z: f64,
}

impl XState {
    /// Validates trace one, non-negative diagonal, and positivity of both
    /// 2x2 blocks (`a*d >= w^2`, `b^2 >= z^2`), each within
    /// [`XSTATE_TOLERANCE`].
    pub fn new(a: f64, b: f64, d: f64, w: f64, z: f64) -> Result<Self> {
        let fail = |reason| {
            Err(Error::InvalidXState {
                reason,
                a,
                b,
                d,
                w,
                z,
            })
        };
        if ![a, b, d, w, z].iter().all(|v| v.is_finite()) {
            return fail("non-finite entry");
        }
        if a < 0.0 || b < 0.0 || d < 0.0 {
            return fail("negative diagonal entry");
        }
        if ((a + 2.0 * b + d) - 1.0).abs() > XSTATE_TOLERANCE {
            return fail("trace differs from one");
        }
        if a * d < w * w - XSTATE_TOLERANCE {
            return fail("outer block not positive semidefinite");
        }
        if b * b < z * z - XSTATE_TOLERANCE {
            return fail("inner block not positive semidefinite");
        }
        Ok(Self { a, b, d, w, z })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// Density-matrix eigenvalues in closed form (unsorted):
    /// `{b + z, b - z, (a+d)/2 +/- sqrt(((a-d)/2)^2 + w^2)}`.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let mean = 0.5 * (self.a + self.d);
        let radius = f64::hypot(0.5 * (self.a - self.d), self.w);
        [self.b + self.z, self.b - self.z, mean + radius, mean - radius]
    }
}

fn xstate_from_parts(spec: &Spectrum, pops: &Populations) -> XState {
    let p = pops.probabilities();
    let v = spec.eigenvectors();
    // Only the ground and top eigenvectors reach the outer block; their
    // |11> and |00> components assemble a, d, and w.
    let (u1, v1) = (v[0][0], v[0][3]);
    let (u4, v4) = (v[3][0], v[3][3]);
    let a = p[0] * u1 * u1 + p[3] * u4 * u4;
    let d = p[0] * v1 * v1 + p[3] * v4 * v4;
    let w = p[0] * u1 * v1 + p[3] * u4 * v4;
    let b = 0.5 * (p[1] + p[2]);
    let z = 0.5 * (p[2] - p[1]);
    XState::new(a, b, d, w, z).expect("thermal construction satisfies the X-state invariants")
}

/// Thermal density matrix of the substance at temperature `t`, in X form.
pub fn thermal_xstate(params: SubstanceParams, temperature: f64) -> Result<XState> {
    validate_temperature(temperature)?;
    let spec = spectrum(params);
    Ok(xstate_from_parts(
        &spec,
        &Populations::gibbs(spec.energies(), temperature),
    ))
}

/// Binary Shannon entropy `h[x] = -x log2 x - (1-x) log2 (1-x)` in bits.
/// Returns exactly `+0.0` at the endpoints so zero checks never see `-0.0`.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -(x * x.log2()) - (1.0 - x) * (1.0 - x).log2()
}

/// Shannon entropy in bits of a probability vector; entries `<= 0`
/// contribute zero (the `0 * log 0 = 0` convention, which also absorbs tiny
/// negative round-off in computed eigenvalues).
pub fn shannon_entropy_bits(probabilities: &[f64]) -> f64 {
    let s: f64 = probabilities
        .iter()
        .map(|&p| if p > 0.0 { -(p * p.log2()) } else { 0.0 })
        .sum();
    s + 0.0 // normalize a possible -0.0 from a lone p = 1 term
}

/// Von Neumann entropy (bits) of the thermal state, which is diagonal in the
/// energy eigenbasis; ranges over [0, 2] for two spins.
pub fn von_neumann_entropy(pops: &Populations) -> f64 {
    shannon_entropy_bits(pops.probabilities())
}

/// Entropy (bits) of either single-spin reduced state of an X state. Both
/// marginals are diagonal with entries `(a + b, b + d)`, so this is
/// `h[a + b]` and the two subsystems agree.
pub fn reduced_entropy(x: &XState) -> f64 {
    binary_entropy(x.a() + x.b())
}
