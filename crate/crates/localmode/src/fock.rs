//! Two-mode Fock states restricted to a fixed total quantum number.
//!
//! The bilinear coupling `a^dag b + a b^dag` conserves `n_a + n_b`, so every
//! state reachable from |n, m> stays inside the (N+1)-dimensional block
//! spanned by |N-j, j>, j = 0..=N, with N = n + m. `SubspaceState` stores
//! amplitudes in exactly that order:
//!
//! > `amps[j]` multiplies |N-j, j>, i.e. **j counts quanta in mode b**.
//!
//! That convention is fixed here once and used everywhere else in the crate.
//!
//! Expectation values of normally ordered ladder monomials are evaluated by
//! exact ladder algebra (running products of square roots), never by
//! factorial ratios, so they stay exact for any occupation that fits in an
//! `u32`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Occupation pair |n, m>: `n` quanta in mode a, `m` quanta in mode b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockPair {
    pub n: u32,
    pub m: u32,
}

impl FockPair {
    pub const fn new(n: u32, m: u32) -> Self {
        Self { n, m }
    }

    /// Total quantum number n + m, labelling the invariant block.
    pub const fn total(self) -> u32 {
        self.n + self.m
    }
}

/// Normally ordered ladder monomial `a^dag^p a^q b^dag^r b^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalMonomial {
    /// Power p of `a^dag`.
    pub create_a: u32,
    /// Power q of `a`.
    pub annihilate_a: u32,
    /// Power r of `b^dag`.
    pub create_b: u32,
    /// Power s of `b`.
    pub annihilate_b: u32,
}

impl NormalMonomial {
    pub const fn new(create_a: u32, annihilate_a: u32, create_b: u32, annihilate_b: u32) -> Self {
        Self {
            create_a,
            annihilate_a,
            create_b,
            annihilate_b,
        }
    }

    /// True when creations balance annihilations (p + r == q + s). Monomials
    /// that do not conserve the total have expectation exactly zero on any
    /// fixed-total block.
    pub const fn conserves_total(self) -> bool {
        self.create_a + self.create_b == self.annihilate_a + self.annihilate_b
    }

    /// Hermitian adjoint: expectation of the adjoint is the conjugate.
    pub const fn adjoint(self) -> Self {
        Self::new(
            self.annihilate_a,
            self.create_a,
            self.annihilate_b,
            self.create_b,
        )
    }
}

/// `a^q |n>` carries sqrt(n (n-1) ... (n-q+1)); exactly zero when q > n.
fn lowering_factor(n: u32, q: u32) -> f64 {
    if q > n {
        return 0.0;
    }
    (0..q).map(|i| f64::from(n - i).sqrt()).product()
}

/// `a^dag^p |n>` carries sqrt((n+1) (n+2) ... (n+p)).
fn raising_factor(n: u32, p: u32) -> f64 {
    (1..=p).map(|i| f64::from(n + i).sqrt()).product()
}

/// Pure state on the fixed-total block of total quantum number N.
#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceState {
    total: u32,
    amps: Vec<Complex64>,
    norm_defect: f64,
}

impl SubspaceState {
    /// Build from raw amplitudes over |N-j, j>, j = 0..=N. The vector is
    /// renormalized; the measured deviation |norm - 1| of the input is kept
    /// and reported by [`SubspaceState::normalization_defect`]. The global
    /// phase is preserved as given.
    pub fn new(total: u32, amps: Vec<Complex64>) -> Result<Self> {
        let want = total as usize + 1;
        if amps.len() != want {
            return Err(Error::BadLength {
                got: amps.len(),
                want,
                total,
            });
        }
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        let norm_defect = (norm - 1.0).abs();
        let amps = amps.into_iter().map(|c| c / norm).collect();
        Ok(Self {
            total,
            amps,
            norm_defect,
        })
    }

    /// Basis state |N-m, m> of the block with total N. Errors when m > N.
    pub fn canonical(total: u32, m: u32) -> Result<Self> {
        if m > total {
            return Err(Error::BadLength {
                got: m as usize,
                want: total as usize + 1,
                total,
            });
        }
        let mut amps = vec![Complex64::ZERO; total as usize + 1];
        amps[m as usize] = Complex64::ONE;
        Self::new(total, amps)
    }

    /// |n, m> viewed as a member of its own block S_{n+m}.
    pub fn from_fock(pair: FockPair) -> Self {
        Self::canonical(pair.total(), pair.m).expect("m <= n + m always holds")
    }

    /// Haar-like random state on the block: every amplitude drawn uniformly
    /// from the complex square [-1, 1]^2, then normalized. Useful for
    /// property tests and witness sweeps.
    pub fn random<R: rand::Rng + ?Sized>(total: u32, rng: &mut R) -> Self {
        loop {
            let amps: Vec<Complex64> = (0..=total)
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let norm_sq: f64 = amps.iter().map(|c| c.norm_sqr()).sum();
            if norm_sq > 1e-6 {
                return Self::new(total, amps).expect("non-degenerate random vector");
            }
        }
    }

    /// Total quantum number N of the block.
    pub fn total_quanta(&self) -> u32 {
        self.total
    }

    /// Block dimension N + 1.
    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    /// Amplitudes over |N-j, j>, j ascending (j = quanta in mode b).
    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    /// |norm - 1| of the raw input this state was built from.
    pub fn normalization_defect(&self) -> f64 {
        self.norm_defect
    }

    /// Current Euclidean norm (1 within roundoff, by construction).
    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// <self| a^dag^p a^q b^dag^r b^s |self> by exact ladder algebra.
    ///
    /// Returns exactly `0 + 0i` when the monomial does not conserve the
    /// total (p + r != q + s): such a monomial maps the block S_N into a
    /// different block, orthogonal to S_N.
    pub fn expectation(&self, mono: NormalMonomial) -> Complex64 {
        let NormalMonomial {
            create_a: p,
            annihilate_a: q,
            create_b: r,
            annihilate_b: s,
        } = mono;
        if !mono.conserves_total() {
            return Complex64::ZERO;
        }
        let mut acc = Complex64::ZERO;
        for j in 0..=self.total {
            let (n, m) = (self.total - j, j);
            if q > n || s > m {
                continue; // annihilation kills the ket
            }
            // Ket |n, m> maps to factor * |n - q + p, m - s + r>; with the
            // conservation rule the image stays inside the block, and its
            // b-occupation is its basis index.
            let factor = lowering_factor(n, q)
                * raising_factor(n - q, p)
                * lowering_factor(m, s)
                * raising_factor(m - s, r);
            let j_bra = (m - s + r) as usize;
            acc += self.amps[j_bra].conj() * self.amps[j as usize] * factor;
        }
        acc
    }

    /// True when all weight sits on a single |N-j, j> up to `tol`:
    /// max_j |amps[j]|^2 >= 1 - tol. These are exactly the product states of
    /// the block.
    pub fn is_product(&self, tol: f64) -> bool {
        let max_p = self.amps.iter().map(|c| c.norm_sqr()).fold(0.0, f64::max);
        max_p >= 1.0 - tol
    }
}

/// <x|y> with the physics convention (conjugate-linear in the first slot).
/// Errors when the states live on different blocks.
pub fn inner_product(x: &SubspaceState, y: &SubspaceState) -> Result<Complex64> {
    if x.total != y.total {
        return Err(Error::TotalMismatch(x.total, y.total));
    }
    Ok(x.amps
        .iter()
        .zip(&y.amps)
        .map(|(xa, ya)| xa.conj() * ya)
        .sum())
}
