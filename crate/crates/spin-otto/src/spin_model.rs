//! Closed-form spectrum of the two-spin Hamiltonian `H = mu*Sx^2 + omega*Sz`.
//!
//! Everything in this crate uses one fixed basis ordering,
//! `{|11>, |10>, |01>, |00>}`, where `|1>` is the single-spin state with
//! `sigma_z = +1`. In that basis H is real-symmetric with an X-shaped
//! sparsity pattern, so its eigensystem splits into a 2x2 block on
//! `span{|11>, |00>}` and a 2x2 block on `span{|10>, |01>}` and can be
//! written down exactly.

use crate::error::{Error, Result};

/// Control knobs of the working substance: the squeezing strength `mu` and
/// the magnetic-field strength `omega`, both dimensionless (k_B = hbar = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubstanceParams {
    mu: f64,
    omega: f64,
}

impl SubstanceParams {
    /// Validates `mu >= 0`, `omega >= 0`, both finite.
    pub fn new(mu: f64, omega: f64) -> Result<Self> {
        if !(mu.is_finite() && omega.is_finite() && mu >= 0.0 && omega >= 0.0) {
            return Err(Error::InvalidParams { mu, omega });
        }
        Ok(Self { mu, omega })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// The four eigen-energies (ascending) and unit eigenvectors of H, together
/// with the spectral constants `kappa = sqrt(mu^2 + 4*omega^2)` and the
/// normalization lengths of the two extremal eigenvectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum {
    energies: [f64; 4],
    eigenvectors: [[f64; 4]; 4],
    kappa: f64,
    a_minus: f64,
    a_plus: f64,
}

impl Spectrum {
    /// Energies in ascending order: `(mu - kappa)/2, 0, mu, (mu + kappa)/2`.
    pub fn energies(&self) -> &[f64; 4] {
        &self.energies
    }

    /// `eigenvectors()[n]` is the unit eigenvector paired with
    /// `energies()[n]`, components in the basis order `{|11>, |10>, |01>, |00>}`.
    /// The global phase is fixed so the `|00>` components of the first and
    /// last eigenvector are non-negative.
    pub fn eigenvectors(&self) -> &[[f64; 4]; 4] {
        &self.eigenvectors
    }

    /// `sqrt(mu^2 + 4*omega^2)`, the splitting of the outer 2x2 block.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Length `sqrt(mu^2 + (2*omega - kappa)^2)` of the unnormalized ground
    /// eigenvector `(2*omega - kappa, 0, 0, mu)`.
    pub fn a_minus(&self) -> f64 {
        self.a_minus
    }

    /// Length `sqrt(mu^2 + (2*omega + kappa)^2)` of the unnormalized top
    /// eigenvector `(2*omega + kappa, 0, 0, mu)`.
    pub fn a_plus(&self) -> f64 {
        self.a_plus
    }
}

/// Closed-form eigensystem of `H = mu*Sx^2 + omega*Sz`.
///
/// The outer-block eigenvectors are parameterized by the component ratios
/// `r = -/+ mu / (2*omega + kappa)`, which stay well-conditioned for
/// `mu << omega`: the direct difference `2*omega - kappa` loses every
/// significant digit there, but it equals `-mu^2 / (2*omega + kappa)`
/// exactly, and the ratio form builds that identity in. As `mu -> 0` the
/// ground state therefore tends to `|00>` with no branch flip.
pub fn spectrum(params: SubstanceParams) -> Spectrum {
    let mu = params.mu();
    let omega = params.omega();
    let kappa = f64::hypot(mu, 2.0 * omega);
    let energies = [0.5 * (mu - kappa), 0.0, mu, 0.5 * (mu + kappa)];

    const HALF_SQRT: f64 = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = [0.0, HALF_SQRT, -HALF_SQRT, 0.0];
    let triplet = [0.0, HALF_SQRT, HALF_SQRT, 0.0];

    let denom = 2.0 * omega + kappa;
    if denom == 0.0 {
        // mu = omega = 0: fully degenerate. Return the continuous limit of
        // the generic branch as the canonical eigenbasis.
        return Spectrum {
            energies,
            eigenvectors: [[0.0, 0.0, 0.0, 1.0], singlet, triplet, [1.0, 0.0, 0.0, 0.0]],
            kappa,
            a_minus: 0.0,
            a_plus: 0.0,
        };
    }

    let r_minus = -mu / denom;
    let r_plus = mu / denom;
    let n_minus = (1.0 + r_minus * r_minus).sqrt();
    let n_plus = (1.0 + r_plus * r_plus).sqrt();
    let ground = [r_minus / n_minus, 0.0, 0.0, 1.0 / n_minus];
    let top = [1.0 / n_plus, 0.0, 0.0, r_plus / n_plus];

    Spectrum {
        energies,
        eigenvectors: [ground, singlet, triplet, top],
        kappa,
        a_minus: mu * n_minus,
        a_plus: denom * n_plus,
    }
}

/// Adjacent level spacings `(E2 - E1, E3 - E2, E4 - E3)`, all non-negative.
pub fn energy_gaps(spec: &Spectrum) -> [f64; 3] {
    let e = spec.energies();
    [e[1] - e[0], e[2] - e[1], e[3] - e[2]]
}
