//! Independent cross-checks for the closed-form results in the rest of the
//! crate, built deliberately from different algorithms: dense Hamiltonian
//! assembly from Pauli blocks, a cyclic Jacobi eigensolver, Gibbs states both
//! by spectral decomposition and by a scaling-and-squaring matrix
//! exponential, and a direct numerical minimization of the measurement
//! entropy that defines quantum discord.
//!
//! Everything here is deterministic: given the same inputs, every function
//! returns bit-identical results regardless of how calls are interleaved, so
//! the checks can be fanned out across threads safely.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::spin_model::SubstanceParams;
use crate::thermal::{reduced_entropy, shannon_entropy_bits, validate_temperature, XState};

/// Largest tolerated asymmetry `|m[i][j] - m[j][i]|` when wrapping raw
/// entries in a [`DenseMatrix4`].
pub const SYMMETRY_TOLERANCE: f64 = 1e-14;

/// The Jacobi iteration stops once the sum of absolute off-diagonal entries
/// falls to this level; rotations drive them to exact zeros, so the bound is
/// reachable at any matrix scale.
pub const JACOBI_OFF_DIAGONAL_TOLERANCE: f64 = 1e-14;

/// Hard cap on Jacobi sweeps; convergence is quadratic and in practice takes
/// fewer than ten.
pub const JACOBI_MAX_SWEEPS: usize = 50;

/// Grid resolution per angle axis used by [`discord_bruteforce`] when callers
/// pass this default.
pub const DEFAULT_COARSE_GRID: usize = 181;

/// Golden-section iterations per coordinate pass in [`discord_bruteforce`].
pub const DEFAULT_REFINE_ITERATIONS: usize = 40;

/// Coarser scans than this risk landing in the wrong basin before
/// refinement, so [`discord_bruteforce`] rejects them outright.
pub const MIN_COARSE_GRID: usize = 64;

/// Taylor terms below this infinity-norm no longer move the matrix
/// exponential and end the series.
const TAYLOR_TERM_TOLERANCE: f64 = 1e-20;

/// A real symmetric 4x4 matrix in the fixed product basis
/// {|11>, |10>, |01>, |00>}; construction validates finiteness and symmetry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenseMatrix4 {
    entries: [[f64; 4]; 4],
}

impl DenseMatrix4 {
    /// Wraps raw entries, rejecting non-finite values and any pair of
    /// mirrored entries differing by more than [`SYMMETRY_TOLERANCE`].
    pub fn new(entries: [[f64; 4]; 4]) -> Result<Self> {
        for (row, r) in entries.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::NonFiniteMatrix { row, col });
                }
            }
        }
        for row in 0..4 {
            for col in row + 1..4 {
                let defect = (entries[row][col] - entries[col][row]).abs();
                if defect > SYMMETRY_TOLERANCE {
                    return Err(Error::NotSymmetric { row, col, defect });
                }
            }
        }
        Ok(Self { entries })
    }

    /// The density matrix of an X state: diagonal `(a, b, b, d)`, corner
    /// coherence `w`, inner coherence `z`, all other entries zero.
    pub fn from_xstate(x: &XState) -> Self {
        let (a, b, d, w, z) = (x.a(), x.b(), x.d(), x.w(), x.z());
        Self {
            entries: [
                [a, 0.0, 0.0, w],
                [0.0, b, z, 0.0],
                [0.0, z, b, 0.0],
                [w, 0.0, 0.0, d],
            ],
        }
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.entries
    }

    /// Single entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row][col]
    }
}

/// Eigenvalues in ascending order with matching unit eigenvectors:
/// `eigenvectors[n]` belongs to `eigenvalues[n]` and is expressed in the
/// same fixed product basis as [`DenseMatrix4`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: [f64; 4],
    pub eigenvectors: [[f64; 4]; 4],
}

fn matmul(a: &[[f64; 4]; 4], b: &[[f64; 4]; 4]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn kron2(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 4]; 4] {
    let mut out = [[0.0; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

/// Assembles `mu * Sx^2 + omega * Sz` as a dense matrix from single-spin
/// Pauli blocks, without using any knowledge of the closed-form spectrum.
/// Single-spin components are ordered `(|1>, |0>)` so the z component of
/// `|1>` is +1, matching the product-basis order of [`DenseMatrix4`].
pub fn build_hamiltonian(params: SubstanceParams) -> DenseMatrix4 {
    const SIGMA_X: [[f64; 2]; 2] = [[0.0, 1.0], [1.0, 0.0]];
    const SIGMA_Z: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, -1.0]];
    const IDENTITY: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];

    let half_sum = |sigma: &[[f64; 2]; 2]| {
        let left = kron2(sigma, &IDENTITY);
        let right = kron2(&IDENTITY, sigma);
        let mut out = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i][j] = 0.5 * (left[i][j] + right[i][j]);
            }
        }
        out
    };

    let sx = half_sum(&SIGMA_X);
    let sz = half_sum(&SIGMA_Z);
    let sx2 = matmul(&sx, &sx);

    let mut h = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            h[i][j] = params.mu() * sx2[i][j] + params.omega() * sz[i][j];
        }
    }
    DenseMatrix4::new(h).expect("Pauli assembly of real coefficients is symmetric")
}

/// Cyclic Jacobi diagonalization of a symmetric matrix. Returns eigenvalues
/// sorted ascending with paired unit eigenvectors; the decomposition
/// satisfies `M v_n = lambda_n v_n` and orthonormality to solver precision.
pub fn jacobi_eigensolve(matrix: &DenseMatrix4) -> EigenDecomposition {
    let mut a = matrix.entries;
    // Columns of `v` accumulate the rotations.
    let mut v = [[0.0; 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for sweep in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..4)
            .flat_map(|p| ((p + 1)..4).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q].abs())
            .sum();
        if off <= JACOBI_OFF_DIAGONAL_TOLERANCE {
            break;
        }

        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let small = 100.0 * apq.abs();
                // Once converged to round-off scale relative to both diagonal
                // entries, flush the element instead of rotating: this is
                // what lets the off-diagonal sum collapse to exact zero.
                if sweep >= 4
                    && a[p][p].abs() + small == a[p][p].abs()
                    && a[q][q].abs() + small == a[q][q].abs()
                {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }

                let diff = a[q][q] - a[p][p];
                let t = if diff.abs() + small == diff.abs() {
                    // Tiny rotation regime: tan(2 phi) ~ 2 apq / diff.
                    apq / diff
                } else {
                    let theta = 0.5 * diff / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                let shift = t * apq;
                a[p][p] -= shift;
                a[q][q] += shift;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..4 {
                    if r != p && r != q {
                        let arp = a[r][p];
                        let arq = a[r][q];
                        a[r][p] = c * arp - s * arq;
                        a[p][r] = a[r][p];
                        a[r][q] = s * arp + c * arq;
                        a[q][r] = a[r][q];
                    }
                    let vrp = v[r][p];
                    let vrq = v[r][q];
                    v[r][p] = c * vrp - s * vrq;
                    v[r][q] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));

    let mut eigenvalues = [0.0; 4];
    let mut eigenvectors = [[0.0; 4]; 4];
    for (n, &col) in order.iter().enumerate() {
        eigenvalues[n] = a[col][col];
        for r in 0..4 {
            eigenvectors[n][r] = v[r][col];
        }
    }
    EigenDecomposition {
        eigenvalues,
        eigenvectors,
    }
}

/// Gibbs state at `(params, T)` built from the Jacobi spectral decomposition:
/// shift-stabilized Boltzmann weights on numerically obtained eigenpairs.
pub fn thermal_state_direct(params: SubstanceParams, temperature: f64) -> Result<DenseMatrix4> {
    validate_temperature(temperature)?;
    let eig = jacobi_eigensolve(&build_hamiltonian(params));

    let shift = eig.eigenvalues.iter().fold(f64::INFINITY, |m, &e| m.min(e));
    let weights = eig.eigenvalues.map(|e| (-(e - shift) / temperature).exp());
    let total: f64 = weights.iter().sum();

    let mut rho = [[0.0; 4]; 4];
    for n in 0..4 {
        let p = weights[n] / total;
        let vec = &eig.eigenvectors[n];
        for i in 0..4 {
            for j in 0..4 {
                rho[i][j] += p * vec[i] * vec[j];
            }
        }
    }
    Ok(DenseMatrix4::new(rho).expect("sum of symmetric projectors is symmetric"))
}

fn infinity_norm(m: &[[f64; 4]; 4]) -> f64 {
    m.iter()
        .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Gibbs state at `(params, T)` via `exp(-H/T)` computed with
/// scaling-and-squaring on a Taylor series — no eigendecomposition at all.
///
/// The exponent is shifted by a Gershgorin lower bound of the spectrum so its
/// eigenvalues are non-positive, each squaring re-symmetrizes and
/// re-normalizes the trace (keeping round-off and underflow in check at very
/// low temperatures), and the result is trace-normalized.
pub fn gibbs_matrix_exponential(
    params: SubstanceParams,
    temperature: f64,
) -> Result<DenseMatrix4> {
    validate_temperature(temperature)?;
    let h = build_hamiltonian(params);

    let gershgorin_floor = (0..4)
        .map(|i| {
            let radius: f64 = (0..4).filter(|&j| j != i).map(|j| h.get(i, j).abs()).sum();
            h.get(i, i) - radius
        })
        .fold(f64::INFINITY, f64::min);

    let mut b = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let shifted = h.get(i, j) - if i == j { gershgorin_floor } else { 0.0 };
            b[i][j] = -shifted / temperature;
        }
    }

    let norm = infinity_norm(&b);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scale = 0.5f64.powi(squarings as i32);
    for row in &mut b {
        for x in row.iter_mut() {
            *x *= scale;
        }
    }

    // exp(b) by Taylor series; ||b|| <= 0.5 so the terms collapse fast.
    let mut result = [[0.0; 4]; 4];
    let mut term = [[0.0; 4]; 4];
    for i in 0..4 {
        result[i][i] = 1.0;
        term[i][i] = 1.0;
    }
    for order in 1..=60 {
        let product = matmul(&term, &b);
        for i in 0..4 {
            for j in 0..4 {
                term[i][j] = product[i][j] / order as f64;
            }
        }
        for i in 0..4 {
            for j in 0..4 {
                result[i][j] += term[i][j];
            }
        }
        if infinity_norm(&term) < TAYLOR_TERM_TOLERANCE {
            break;
        }
    }

    for _ in 0..squarings {
        result = matmul(&result, &result);
        // Squaring a nearly-symmetric matrix doubles its asymmetry drift;
        // folding it back each step keeps the result within the validation
        // tolerance. Trace renormalization stops the entries from flowing
        // out of floating-point range over many squarings.
        let mut symmetrized = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                symmetrized[i][j] = 0.5 * (result[i][j] + result[j][i]);
            }
        }
        let trace: f64 = (0..4).map(|i| symmetrized[i][i]).sum();
        for i in 0..4 {
            for j in 0..4 {
                symmetrized[i][j] /= trace;
            }
        }
        result = symmetrized;
    }

    let trace: f64 = (0..4).map(|i| result[i][i]).sum();
    for row in &mut result {
        for x in row.iter_mut() {
            *x /= trace;
        }
    }
    Ok(DenseMatrix4::new(result).expect("symmetrized exponential stays symmetric"))
}

/// Bloch-sphere direction of a projective measurement on the second spin:
/// polar angle `theta` in `[0, pi]`, azimuth `phi` in `[0, 2*pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementAngles {
    theta: f64,
    phi: f64,
}

impl MeasurementAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite()
            || !phi.is_finite()
            || !(0.0..=PI).contains(&theta)
            || !(0.0..=TAU).contains(&phi)
        {
            return Err(Error::InvalidMeasurementAngles { theta, phi });
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Dense state plus the measurement-independent entropy offset, cached once
/// per state so the angle scan only pays for the conditional-entropy part.
struct MeasurementContext {
    rho: [[f64; 4]; 4],
    base: f64,
}

impl MeasurementContext {
    fn new(x: &XState) -> Self {
        Self {
            rho: DenseMatrix4::from_xstate(x).entries,
            base: reduced_entropy(x) - shannon_entropy_bits(&x.eigenvalues()),
        }
    }

    /// The quantity minimized over measurement directions: local entropy
    /// minus total entropy plus the expected entropy of the first spin
    /// conditioned on a projective measurement of the second along
    /// `(theta, phi)`.
    fn objective(&self, theta: f64, phi: f64) -> f64 {
        let phase = Complex64::from_polar(1.0, phi);
        let (sin_half, cos_half) = (0.5 * theta).sin_cos();
        // Amplitudes ordered as the (|1>, |0>) components of the measured
        // spin, matching the product-basis convention index = 2*xa + xb with
        // x = 0 standing for |1>.
        let directions = [
            [phase * sin_half, Complex64::new(cos_half, 0.0)],
            [-phase * cos_half, Complex64::new(sin_half, 0.0)],
        ];

        let mut conditional = 0.0;
        for direction in &directions {
            let mut block = [[Complex64::new(0.0, 0.0); 2]; 2];
            for xa in 0..2 {
                for xap in 0..2 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for b in 0..2 {
                        for bp in 0..2 {
                            acc += direction[b].conj()
                                * self.rho[2 * xa + b][2 * xap + bp]
                                * direction[bp];
                        }
                    }
                    block[xa][xap] = acc;
                }
            }
            let probability = block[0][0].re + block[1][1].re;
            if probability <= 1e-300 {
                continue;
            }
            let mean = 0.5 * (block[0][0].re + block[1][1].re) / probability;
            let radius = f64::hypot(
                0.5 * (block[0][0].re - block[1][1].re) / probability,
                block[0][1].norm() / probability,
            );
            conditional +=
                probability * shannon_entropy_bits(&[mean + radius, mean - radius]);
        }
        self.base + conditional
    }
}

/// Evaluates the discord measurement objective at one angle pair.
pub fn measurement_objective(x: &XState, angles: MeasurementAngles) -> f64 {
    MeasurementContext::new(x).objective(angles.theta(), angles.phi())
}

fn golden_section_min(
    mut lo: f64,
    mut hi: f64,
    iterations: usize,
    f: impl Fn(f64) -> f64,
) -> (f64, f64) {
    let inv_phi = (5.0f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iterations {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Quantum discord by direct numerical minimization over all projective
/// measurement directions of the second spin: a dense `coarse_n x coarse_n`
/// scan over `(theta, phi)` followed by golden-section coordinate passes
/// (theta, phi, theta again) of `refine_iterations` steps each, keeping the
/// best value ever seen. Entirely deterministic.
///
/// # Panics
///
/// If `coarse_n` is below [`MIN_COARSE_GRID`].
pub fn discord_bruteforce(x: &XState, coarse_n: usize, refine_iterations: usize) -> f64 {
    assert!(
        coarse_n >= MIN_COARSE_GRID,
        "coarse grid must have at least {MIN_COARSE_GRID} points per axis, got {coarse_n}"
    );
    let ctx = MeasurementContext::new(x);

    let mut best_theta = 0.0;
    let mut best_phi = 0.0;
    let mut best = f64::INFINITY;
    for i in 0..coarse_n {
        let theta = PI * i as f64 / (coarse_n - 1) as f64;
        for j in 0..coarse_n {
            // The azimuth is periodic, so the grid stops one step short of
            // 2*pi instead of duplicating the phi = 0 column.
            let phi = TAU * j as f64 / coarse_n as f64;
            let value = ctx.objective(theta, phi);
            if value < best {
                best = value;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    let theta_step = PI / (coarse_n - 1) as f64;
    let phi_step = TAU / coarse_n as f64;
    for (on_theta, step) in [(true, theta_step), (false, phi_step), (true, theta_step)] {
        let (center, max) = if on_theta {
            (best_theta, PI)
        } else {
            (best_phi, TAU)
        };
        let lo = (center - step).max(0.0);
        let hi = (center + step).min(max);
        let (point, value) = golden_section_min(lo, hi, refine_iterations, |u| {
            if on_theta {
                ctx.objective(u, best_phi)
            } else {
                ctx.objective(best_theta, u)
            }
        });
        if value < best {
            best = value;
            if on_theta {
                best_theta = point;
            } else {
                best_phi = point;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlations::discord_analytic;
    use crate::spin_model::spectrum;
    use crate::thermal::thermal_xstate;

    fn params(mu: f64, omega: f64) -> SubstanceParams {
        SubstanceParams::new(mu, omega).unwrap()
    }

    #[test]
    fn dense_matrix_validation() {
        let mut m = [[0.0; 4]; 4];
        m[0][1] = 1.0;
        match DenseMatrix4::new(m) {
            Err(Error::NotSymmetric { row: 0, col: 1, defect }) => {
                assert!((defect - 1.0).abs() < 1e-15)
            }
            other => panic!("expected asymmetry rejection, got {other:?}"),
        }

        m[1][0] = 1.0;
        m[2][3] = f64::NAN;
        m[3][2] = f64::NAN;
        match DenseMatrix4::new(m) {
            Err(Error::NonFiniteMatrix { row: 2, col: 3 }) => {}
            other => panic!("expected non-finite rejection, got {other:?}"),
        }
    }

    #[test]
    fn hamiltonian_entries_are_exact() {
        let h = build_hamiltonian(params(5.0, 10.0));
        let expected = [
            [12.5, 0.0, 0.0, 2.5],
            [0.0, 2.5, 2.5, 0.0],
            [0.0, 2.5, 2.5, 0.0],
            [2.5, 0.0, 0.0, -7.5],
        ];
        assert_eq!(h.entries(), &expected);

        let zero = build_hamiltonian(params(0.0, 0.0));
        assert_eq!(zero.entries(), &[[0.0; 4]; 4]);
    }

    #[test]
    fn jacobi_leaves_diagonal_matrices_alone() {
        let m = DenseMatrix4::new([
            [3.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, 2.0, 0.0],
            [0.0, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        let eig = jacobi_eigensolve(&m);
        assert_eq!(eig.eigenvalues, [-1.0, 0.5, 2.0, 3.0]);
        for (n, vec) in eig.eigenvectors.iter().enumerate() {
            let norm: f64 = vec.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-15, "vector {n} not unit");
        }
    }

    #[test]
    fn jacobi_matches_closed_form_spectrum() {
        let p = params(5.0, 10.0);
        let eig = jacobi_eigensolve(&build_hamiltonian(p));
        let reference = spectrum(p);
        for n in 0..4 {
            assert!(
                (eig.eigenvalues[n] - reference.energies()[n]).abs() < 1e-12,
                "eigenvalue {n} mismatch"
            );
        }
        // Eigenvectors agree up to sign (no degeneracy at these couplings).
        for n in 0..4 {
            let dot: f64 = (0..4)
                .map(|r| eig.eigenvectors[n][r] * reference.eigenvectors()[n][r])
                .sum();
            assert!(dot.abs() > 1.0 - 1e-12, "eigenvector {n} misaligned");
        }
    }

    #[test]
    fn jacobi_decomposition_residuals_are_tiny() {
        let h = build_hamiltonian(params(7.0, 3.0));
        let eig = jacobi_eigensolve(&h);
        for n in 0..4 {
            let v = &eig.eigenvectors[n];
            for i in 0..4 {
                let hv: f64 = (0..4).map(|j| h.get(i, j) * v[j]).sum();
                assert!(
                    (hv - eig.eigenvalues[n] * v[i]).abs() < 1e-12,
                    "eigen residual at ({n}, {i})"
                );
            }
        }
        for m in 0..4 {
            for n in 0..4 {
                let dot: f64 = (0..4)
                    .map(|r| eig.eigenvectors[m][r] * eig.eigenvectors[n][r])
                    .sum();
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((dot - expected).abs() < 1e-12, "orthonormality ({m}, {n})");
            }
        }
    }

    #[test]
    fn direct_thermal_state_matches_closed_form_xstate() {
        let cases = [(4.0, 0.0, 1.0), (5.0, 10.0, 1.0), (1.0, 2.0, 0.5)];
        for (mu, omega, t) in cases {
            let dense = thermal_state_direct(params(mu, omega), t).unwrap();
            let x = thermal_xstate(params(mu, omega), t).unwrap();
            let expected = DenseMatrix4::from_xstate(&x);
            for i in 0..4 {
                for j in 0..4 {
                    assert!(
                        (dense.get(i, j) - expected.get(i, j)).abs() < 1e-10,
                        "entry ({i}, {j}) at mu={mu}, omega={omega}, T={t}"
                    );
                }
            }
            let trace: f64 = (0..4).map(|i| dense.get(i, i)).sum();
            assert!((trace - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn direct_thermal_state_keeps_the_x_shape_exactly() {
        let dense = thermal_state_direct(params(4.0, 0.0), 1.0).unwrap();
        for (i, j) in [(0, 1), (0, 2), (1, 3), (2, 3)] {
            assert!(dense.get(i, j).abs() < 1e-14, "off-X entry ({i}, {j})");
        }
        assert!((dense.get(0, 0) - 0.25).abs() < 1e-10);
        assert!((dense.get(1, 1) - 0.25).abs() < 1e-10);
        assert!((dense.get(0, 3) + 0.241006895018954).abs() < 1e-10);
        assert!((dense.get(1, 2) + 0.241006895018954).abs() < 1e-10);
    }

    #[test]
    fn matrix_exponential_agrees_with_spectral_route() {
        let cases = [
            (5.0, 10.0, 0.5),
            (5.0, 10.0, 4.0),
            (4.0, 0.0, 1.0),
            (1.0, 2.0, 1.0),
            (0.0, 0.0, 2.0),
            (60.0, 11.0, 4.0),
        ];
        for (mu, omega, t) in cases {
            let via_exp = gibbs_matrix_exponential(params(mu, omega), t).unwrap();
            let via_eig = thermal_state_direct(params(mu, omega), t).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    assert!(
                        (via_exp.get(i, j) - via_eig.get(i, j)).abs() < 1e-8,
                        "entry ({i}, {j}) at mu={mu}, omega={omega}, T={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn matrix_exponential_survives_deep_freeze() {
        // At T = 1e-3 the unscaled Boltzmann factors underflow f64 entirely;
        // the per-squaring renormalization keeps the ground projector intact.
        let p = params(5.0, 10.0);
        let via_exp = gibbs_matrix_exponential(p, 1e-3).unwrap();
        let ground = spectrum(p).eigenvectors()[0];
        for i in 0..4 {
            for j in 0..4 {
                assert!(
                    (via_exp.get(i, j) - ground[i] * ground[j]).abs() < 1e-8,
                    "entry ({i}, {j})"
                );
            }
        }
    }

    #[test]
    fn measurement_angles_are_validated() {
        assert!(MeasurementAngles::new(-0.1, 0.0).is_err());
        assert!(MeasurementAngles::new(0.0, 7.0).is_err());
        assert!(MeasurementAngles::new(f64::NAN, 0.0).is_err());
        assert!(MeasurementAngles::new(PI, TAU).is_ok());
    }

    #[test]
    fn objective_reproduces_both_analytic_branches() {
        for (mu, omega, t) in [(5.0, 10.0, 1.0), (4.0, 4.0, 1.0), (4.0, 0.0, 1.0)] {
            let x = thermal_xstate(params(mu, omega), t).unwrap();
            let report = discord_analytic(&x);

            let axis = measurement_objective(&x, MeasurementAngles::new(0.0, 0.0).unwrap());
            assert!(
                (axis - report.d1).abs() < 1e-9,
                "axis branch at mu={mu}, omega={omega}"
            );

            let transverse = [0.0, PI / 2.0]
                .into_iter()
                .map(|phi| {
                    measurement_objective(
                        &x,
                        MeasurementAngles::new(PI / 2.0, phi).unwrap(),
                    )
                })
                .fold(f64::INFINITY, f64::min);
            assert!(
                (transverse - report.d2).abs() < 1e-9,
                "transverse branch at mu={mu}, omega={omega}"
            );
        }
    }

    #[test]
    fn bruteforce_on_reference_states() {
        let mixed = XState::new(0.25, 0.25, 0.25, 0.0, 0.0).unwrap();
        assert!(discord_bruteforce(&mixed, 64, 20).abs() < 1e-9);

        let singlet = XState::new(0.0, 0.5, 0.0, 0.0, -0.5).unwrap();
        assert!((discord_bruteforce(&singlet, 64, 20) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bruteforce_matches_analytic_minimum_on_thermal_states() {
        for (mu, omega, t) in [(5.0, 10.0, 1.0), (4.0, 4.0, 1.0), (1.0, 2.0, 1.0)] {
            let x = thermal_xstate(params(mu, omega), t).unwrap();
            let report = discord_analytic(&x);
            let brute =
                discord_bruteforce(&x, DEFAULT_COARSE_GRID, DEFAULT_REFINE_ITERATIONS);
            assert!(
                (brute - report.d1.min(report.d2)).abs() < 1e-9,
                "minimum mismatch at mu={mu}, omega={omega}, T={t}"
            );
            assert!(brute <= report.d1 + 1e-9);
            assert!(brute <= report.d2 + 1e-9);
        }
    }

    #[test]
    fn bruteforce_rejects_coarse_grids() {
        let x = XState::new(0.25, 0.25, 0.25, 0.0, 0.0).unwrap();
        let result = std::panic::catch_unwind(|| discord_bruteforce(&x, 10, 5));
        assert!(result.is_err());
    }
}
