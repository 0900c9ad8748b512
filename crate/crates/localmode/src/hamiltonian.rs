//! Fixed-total blocks of the coupled-pair Hamiltonian, their exact
//! eigensystems, and first-order perturbative eigenstates.
//!
//! In wavenumber units the Hamiltonian reads
//!
//! ```text
//! H = (omega - gamma/2) (n_a + n_b) - (gamma/2) (n_a^2 + n_b^2)
//!     - epsilon (a^dag b + a b^dag)
//! ```
//!
//! On the block spanned by |N-j, j> (j = 0..=N) it is the real symmetric
//! tridiagonal matrix with
//!
//! * diagonal  `H[j,j] = omega N - (gamma/2)(N^2 + N - 2 N j + 2 j^2)`
//! * off-diagonal `H[j,j+1] = H[j+1,j] = -epsilon sqrt((j+1)(N-j))`, j = 0..N-1.
//!
//! Note the coupling reaches every neighbouring pair, including j = 0: for
//! N = 1 the block is `[[omega-gamma, -eps], [-eps, omega-gamma]]` with
//! eigenvalues `omega - gamma -+ epsilon`.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::fock::SubspaceState;
use crate::params::ModelParams;

/// Diagonal element <n, m| H |n, m>; shared verbatim by the block and the
/// full square-box builders so block extraction is bit-exact.
pub(crate) fn diagonal_energy(params: &ModelParams, n: u32, m: u32) -> f64 {
    let (na, mb) = (f64::from(n), f64::from(m));
    (params.omega - 0.5 * params.gamma) * (na + mb) - 0.5 * params.gamma * (na * na + mb * mb)
}

/// One-quantum hop <n-1, m+1| H |n, m> = -epsilon sqrt(n (m+1)).
pub(crate) fn hop_element(params: &ModelParams, n: u32, m: u32) -> f64 {
    -params.epsilon * (f64::from(n) * f64::from(m + 1)).sqrt()
}

/// One block of the Hamiltonian together with its validated eigensystem.
///
/// Eigenvalues are sorted ascending; eigenvectors are real, orthonormal, and
/// sign-fixed (largest-magnitude component positive) so results are
/// deterministic.
#[derive(Clone, Debug)]
pub struct SubspaceHamiltonian {
    total: u32,
    params: ModelParams,
    matrix: DMatrix<f64>,
    energies: Vec<f64>,
    modes: DMatrix<f64>,
}

impl SubspaceHamiltonian {
    pub fn new(total: u32, params: &ModelParams) -> Result<Self> {
        let dim = total as usize + 1;
        let mut matrix = DMatrix::<f64>::zeros(dim, dim);
        for j in 0..=total {
            matrix[(j as usize, j as usize)] = diagonal_energy(params, total - j, j);
        }
        for j in 0..total {
            // <basis_{j+1}| H |basis_j>: the hop |N-j, j> -> |N-j-1, j+1>.
            let el = hop_element(params, total - j, j);
            matrix[(j as usize + 1, j as usize)] = el;
            matrix[(j as usize, j as usize + 1)] = el;
        }

        let (energies, modes) = if params.epsilon == 0.0 {
            // Uncoupled blocks are diagonal already; with degenerate pairs
            // (j, N-j) an iterative solver may return arbitrary mixtures, so
            // take the canonical eigenbasis directly (stable sort by energy).
            let mut order: Vec<usize> = (0..dim).collect();
            order.sort_by(|&a, &b| {
                matrix[(a, a)]
                    .partial_cmp(&matrix[(b, b)])
                    .expect("finite energies")
            });
            let energies: Vec<f64> = order.iter().map(|&j| matrix[(j, j)]).collect();
            let mut modes = DMatrix::<f64>::zeros(dim, dim);
            for (k, &j) in order.iter().enumerate() {
                modes[(j, k)] = 1.0;
            }
            (energies, modes)
        } else {
            let eig = nalgebra::SymmetricEigen::new(matrix.clone());
            let mut order: Vec<usize> = (0..dim).collect();
            order.sort_by(|&a, &b| {
                eig.eigenvalues[a]
                    .partial_cmp(&eig.eigenvalues[b])
                    .expect("finite energies")
            });
            let energies: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
            let mut modes = DMatrix::<f64>::zeros(dim, dim);
            for (col, &k) in order.iter().enumerate() {
                let src = eig.eigenvectors.column(k);
                // Sign fix: largest-magnitude component (first among ties) positive.
                let mut lead = 0;
                for i in 1..dim {
                    if src[i].abs() > src[lead].abs() {
                        lead = i;
                    }
                }
                let sign = if src[lead] < 0.0 { -1.0 } else { 1.0 };
                for i in 0..dim {
                    modes[(i, col)] = sign * src[i];
                }
            }
            (energies, modes)
        };

        let h = Self {
            total,
            params: *params,
            matrix,
            energies,
            modes,
        };
        h.validate()?;
        Ok(h)
    }

    /// Orthonormality within 1e-10 and eigen-residual within 1e-8; failures
    /// are loud, never absorbed.
    fn validate(&self) -> Result<()> {
        let dim = self.dim();
        for k in 0..dim {
            for l in k..dim {
                let dot: f64 = (0..dim)
                    .map(|i| self.modes[(i, k)] * self.modes[(i, l)])
                    .sum();
                let want = if k == l { 1.0 } else { 0.0 };
                if (dot - want).abs() > 1e-10 {
                    return Err(Error::Numerical(format!(
                        "eigenvector orthonormality violated at ({k},{l}): {dot}"
                    )));
                }
            }
        }
        for k in 0..dim {
            for i in 0..dim {
                let hv: f64 = (0..dim)
                    .map(|j| self.matrix[(i, j)] * self.modes[(j, k)])
                    .sum();
                let resid = hv - self.energies[k] * self.modes[(i, k)];
                if resid.abs() > 1e-8 {
                    return Err(Error::Numerical(format!(
                        "eigen-residual {resid:e} at mode {k}, row {i}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn total_quanta(&self) -> u32 {
        self.total
    }

    pub fn dim(&self) -> usize {
        self.total as usize + 1
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// The (N+1)x(N+1) real symmetric matrix itself.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Eigenvalues in cm^-1, ascending.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    /// Orthonormal eigenvectors as matrix columns, ordered like `energies`.
    pub fn modes(&self) -> &DMatrix<f64> {
        &self.modes
    }

    /// k-th eigenvector as a block state (its amplitudes over |N-j, j>).
    pub fn eigenstate(&self, k: usize) -> SubspaceState {
        let amps = (0..self.dim())
            .map(|i| num_complex::Complex64::new(self.modes[(i, k)], 0.0))
            .collect();
        SubspaceState::new(self.total, amps).expect("eigenvector is normalized")
    }

    /// <state| H |state> in cm^-1.
    pub fn expectation_energy(&self, state: &SubspaceState) -> Result<f64> {
        if state.total_quanta() != self.total {
            return Err(Error::TotalMismatch(self.total, state.total_quanta()));
        }
        let amps = state.amps();
        let mut acc = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                acc += (amps[i].conj() * amps[j]).re * self.matrix[(i, j)];
            }
        }
        Ok(acc)
    }
}

/// First-order perturbative eigenstate grown from the basis state |N-m, m>,
/// treating the hop term as the perturbation of the diagonal (anharmonic)
/// part.
///
/// The unperturbed level is coupled only to its neighbours, so the corrected
/// state has support on m-1, m, m+1 with signed admixtures
///
/// ```text
/// lower:  -(eps/gamma) sqrt((N-m+1) m)   / (N + 1 - 2m)   onto |N-m+1, m-1>
/// upper:  -(eps/gamma) sqrt((N-m)(m+1))  / (2m + 1 - N)   onto |N-m-1, m+1>
/// ```
///
/// The theory refuses when |N - 2m| == 1 (the level is degenerate with its
/// neighbour, the denominator vanishes) and when gamma == 0 (fully
/// degenerate unperturbed spectrum).
#[derive(Clone, Debug)]
pub struct PerturbedState {
    /// Total quantum number N of the block.
    pub total: u32,
    /// b-mode occupation m of the unperturbed basis state |N-m, m>.
    pub excitation_b: u32,
    /// Normalized corrected state; `None` when the theory is not applicable.
    pub state: Option<SubspaceState>,
    /// Signed coefficient on |N-m+1, m-1> before normalization (0 at m = 0).
    pub lower_admixture: f64,
    /// Signed coefficient on |N-m-1, m+1> before normalization (0 at m = N).
    pub upper_admixture: f64,
    /// False when the expansion is refused outright.
    pub valid: bool,
    /// Why the state is invalid, when it is.
    pub diagnostic: Option<String>,
    /// True when gamma < 4 epsilon: the expansion parameter is not small and
    /// first-order results should be treated qualitatively.
    pub weak_coupling_warning: bool,
}

/// Build the first-order perturbative eigenstate for |N-m, m>.
pub fn perturbed_state(total: u32, m: u32, params: &ModelParams) -> Result<PerturbedState> {
    if m > total {
        return Err(Error::BadParams(format!(
            "m = {m} exceeds the total quantum number N = {total}"
        )));
    }
    let refusal = |diag: String| PerturbedState {
        total,
        excitation_b: m,
        state: None,
        lower_admixture: 0.0,
        upper_admixture: 0.0,
        valid: false,
        diagnostic: Some(diag),
        weak_coupling_warning: false,
    };

    if params.gamma == 0.0 {
        return Ok(refusal(
            "gamma = 0 leaves the unperturbed spectrum fully degenerate; \
             first-order perturbation theory fails"
                .into(),
        ));
    }
    let detuning = i64::from(total) - 2 * i64::from(m); // N - 2m
    if detuning.abs() == 1 {
        return Ok(refusal(format!(
            "|N - 2m| = 1: level |{}, {m}> is degenerate with its neighbour \
             under the anharmonic splitting, so the first-order denominator \
             vanishes; use the exact eigensystem instead",
            total - m
        )));
    }

    let ratio = params.epsilon / params.gamma;
    let nf = f64::from(total);
    let mf = f64::from(m);
    // Signed first-order coefficients <k|V|m> / (E_m - E_k) for the two
    // neighbours; the denominators are gamma (N + 1 - 2m) and gamma (2m + 1 - N).
    let lower = if m >= 1 {
        -ratio * ((nf - mf + 1.0) * mf).sqrt() / (nf + 1.0 - 2.0 * mf)
    } else {
        0.0
    };
    let upper = if m < total {
        -ratio * ((nf - mf) * (mf + 1.0)).sqrt() / (2.0 * mf + 1.0 - nf)
    } else {
        0.0
    };

    let mut amps = vec![num_complex::Complex64::ZERO; total as usize + 1];
    amps[m as usize] = num_complex::Complex64::ONE;
    if m >= 1 {
        amps[m as usize - 1] = num_complex::Complex64::new(lower, 0.0);
    }
    if m < total {
        amps[m as usize + 1] = num_complex::Complex64::new(upper, 0.0);
    }
    let state = SubspaceState::new(total, amps)?;

    Ok(PerturbedState {
        total,
        excitation_b: m,
        state: Some(state),
        lower_admixture: lower,
        upper_admixture: upper,
        valid: true,
        diagnostic: None,
        weak_coupling_warning: params.gamma < 4.0 * params.epsilon,
    })
}

/// Overlap |<exact eigenvector | first-order state>| against the closest
/// exact eigenvector of the block, where "closest" means the best-matching
/// unit vector among exact eigenvectors of the level the basis state
/// `|total - m, m>` belongs to.
///
/// For `m != total - m` the unperturbed level is exactly two-fold degenerate
/// with its mode-swapped partner `|m, total - m>`: the block commutes with the
/// mode swap, so its exact eigenvectors come in even/odd pairs split only by
/// a high-order tunneling amplitude that first-order theory cannot resolve.
/// Every unit vector in that two-dimensional eigenspace is an exact
/// eigenvector to the accuracy of the splitting, so the best-matching exact
/// eigenvector is the normalized projection of the approximate state onto the
/// span of the pair, and the overlap equals the projection norm
/// `sqrt(|<v1|p>|^2 + |<v2|p>|^2)`. For the self-paired level `m = total - m`
/// this reduces to the ordinary single-eigenvector overlap.
///
/// Propagates the refusal of [`perturbed_state`] as an error.
pub fn eigenstate_overlap(total: u32, m: u32, params: &ModelParams) -> Result<f64> {
    let pert = perturbed_state(total, m, params)?;
    let Some(approx) = pert.state else {
        return Err(Error::Perturbation(
            pert.diagnostic.unwrap_or_else(|| "refused".into()),
        ));
    };
    let h = SubspaceHamiltonian::new(total, params)?;
    // Branch tracking the basis state itself: maximize |v_k[m]|.
    let argmax_row = |row: u32, skip: Option<usize>| -> usize {
        let mut best = usize::MAX;
        for k in 0..h.dim() {
            if Some(k) == skip {
                continue;
            }
            if best == usize::MAX
                || h.modes()[(row as usize, k)].abs() > h.modes()[(row as usize, best)].abs()
            {
                best = k;
            }
        }
        best
    };
    let k1 = argmax_row(m, None);
    let mut overlap_sq = crate::fock::inner_product(&h.eigenstate(k1), &approx)?.norm_sqr();
    let partner = total - m;
    if partner != m {
        // Branch tracking the degenerate swap partner |m, total - m>.
        let k2 = argmax_row(partner, Some(k1));
        overlap_sq += crate::fock::inner_product(&h.eigenstate(k2), &approx)?.norm_sqr();
    }
    Ok(overlap_sq.sqrt().min(1.0))
}
