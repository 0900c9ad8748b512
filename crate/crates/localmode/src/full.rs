//! Untruncated two-mode states on a square Fock cutoff.
//!
//! This is the slow, obviously-correct representation: it knows nothing about
//! the fixed-total blocks and is used as the independent oracle for
//! everything the block-restricted fast path computes — expectation values,
//! Hamiltonian matrix elements, and propagation (including the check that no
//! probability leaks out of a block).

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::dynamics::TimeUnit;
use crate::error::{Error, Result};
use crate::fock::{FockPair, NormalMonomial, SubspaceState};
use crate::hamiltonian::{diagonal_energy, hop_element};
use crate::params::ModelParams;

/// Amplitudes below this magnitude are dropped when storing a state; far
/// below any physical tolerance, so pruning is lossless in practice.
const PRUNE_BELOW: f64 = 1e-300;

/// Normalized pure state on the square box n, m <= cutoff, stored sparsely
/// with deterministic (ordered) iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct FullTwoModeState {
    cutoff: u32,
    amps: BTreeMap<FockPair, Complex64>,
}

impl FullTwoModeState {
    /// Build from (occupation, amplitude) entries; amplitudes on the same
    /// occupation accumulate. The state is normalized and entries with
    /// magnitude below 1e-300 are dropped.
    pub fn new(
        cutoff: u32,
        entries: impl IntoIterator<Item = (FockPair, Complex64)>,
    ) -> Result<Self> {
        let mut amps: BTreeMap<FockPair, Complex64> = BTreeMap::new();
        for (pair, amp) in entries {
            if pair.n > cutoff || pair.m > cutoff {
                return Err(Error::OutsideCutoff {
                    n: pair.n,
                    m: pair.m,
                    cutoff,
                });
            }
            *amps.entry(pair).or_insert(Complex64::ZERO) += amp;
        }
        let norm = amps.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        amps = amps
            .into_iter()
            .map(|(k, v)| (k, v / norm))
            .filter(|(_, v)| v.norm() > PRUNE_BELOW)
            .collect();
        Ok(Self { cutoff, amps })
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Amplitude on |n, m| (zero when absent or outside the box).
    pub fn amp(&self, pair: FockPair) -> Complex64 {
        self.amps.get(&pair).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn norm(&self) -> f64 {
        self.amps.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Probability carried by the block n + m == total.
    pub fn block_weight(&self, total: u32) -> f64 {
        self.amps
            .iter()
            .filter(|(pair, _)| pair.total() == total)
            .map(|(_, amp)| amp.norm_sqr())
            .sum()
    }

    /// Project onto the block n + m == total and renormalize.
    /// Errors when the block carries (numerically) no weight.
    pub fn restrict_to_block(&self, total: u32) -> Result<SubspaceState> {
        if total > self.cutoff {
            return Err(Error::CutoffTooSmall {
                cutoff: self.cutoff,
                total,
            });
        }
        let amps: Vec<Complex64> = (0..=total)
            .map(|j| self.amp(FockPair::new(total - j, j)))
            .collect();
        SubspaceState::new(total, amps)
    }

    /// <self| a^dag^p a^q b^dag^r b^s |self> by direct ladder algebra over
    /// every stored occupation. No block shortcut: the selection rule is not
    /// consulted, it has to emerge from the algebra.
    pub fn expectation(&self, mono: NormalMonomial) -> Complex64 {
        let NormalMonomial {
            create_a: p,
            annihilate_a: q,
            create_b: r,
            annihilate_b: s,
        } = mono;
        let mut acc = Complex64::ZERO;
        for (&pair, &amp) in &self.amps {
            let FockPair { n, m } = pair;
            if q > n || s > m {
                continue;
            }
            let factor = lowering(n, q) * raising(n - q, p) * lowering(m, s) * raising(m - s, r);
            let bra = FockPair::new(n - q + p, m - s + r);
            // Beyond the box the stored amplitude is zero by construction.
            acc += self.amp(bra).conj() * amp * factor;
        }
        acc
    }
}

fn lowering(n: u32, q: u32) -> f64 {
    if q > n {
        return 0.0;
    }
    (0..q).map(|i| f64::from(n - i).sqrt()).product()
}

fn raising(n: u32, p: u32) -> f64 {
    (1..=p).map(|i| f64::from(n + i).sqrt()).product()
}

/// Embed a block state into the square box (identity on amplitudes).
/// Errors when the cutoff cannot hold the block.
pub fn embed(state: &SubspaceState, cutoff: u32) -> Result<FullTwoModeState> {
    let total = state.total_quanta();
    if cutoff < total {
        return Err(Error::CutoffTooSmall { cutoff, total });
    }
    FullTwoModeState::new(
        cutoff,
        state
            .amps()
            .iter()
            .enumerate()
            .map(|(j, &amp)| (FockPair::new(total - j as u32, j as u32), amp)),
    )
}

/// Dense index of |n, m> in the square box.
fn box_index(pair: FockPair, cutoff: u32) -> usize {
    pair.n as usize * (cutoff as usize + 1) + pair.m as usize
}

/// Full Hamiltonian on the square box, assembled term by term from the
/// number operators and the one-quantum hop — the same scalar element
/// functions the block builder uses, so block extraction is bit-exact.
pub fn full_hamiltonian(cutoff: u32, params: &ModelParams) -> DMatrix<f64> {
    let dim = (cutoff as usize + 1) * (cutoff as usize + 1);
    let mut h = DMatrix::<f64>::zeros(dim, dim);
    for n in 0..=cutoff {
        for m in 0..=cutoff {
            let from = box_index(FockPair::new(n, m), cutoff);
            h[(from, from)] = diagonal_energy(params, n, m);
            // -epsilon a^dag b: |n, m> -> |n+1, m-1>, amplitude -eps sqrt((n+1) m).
            if m >= 1 && n < cutoff {
                let to = box_index(FockPair::new(n + 1, m - 1), cutoff);
                h[(to, from)] = hop_element(params, m, n); // sqrt(m (n+1)), b -> a direction
            }
            // -epsilon a b^dag: |n, m> -> |n-1, m+1>, amplitude -eps sqrt(n (m+1)).
            if n >= 1 && m < cutoff {
                let to = box_index(FockPair::new(n - 1, m + 1), cutoff);
                h[(to, from)] = hop_element(params, n, m);
            }
        }
    }
    h
}

/// Spectral propagator for the square box; eigendecomposed once, reusable
/// across states and times.
pub struct FullPropagator {
    cutoff: u32,
    energies: DVector<f64>,
    modes: DMatrix<f64>,
}

impl FullPropagator {
    pub fn new(cutoff: u32, params: &ModelParams) -> Result<Self> {
        let h = full_hamiltonian(cutoff, params);
        let eig = nalgebra::SymmetricEigen::new(h);
        Ok(Self {
            cutoff,
            energies: eig.eigenvalues,
            modes: eig.eigenvectors,
        })
    }

    /// exp(-i H t) applied in the eigenbasis. Errors loudly when the raw
    /// propagated norm drifts from 1 by more than 1e-12 (construction then
    /// absorbs the remaining sub-tolerance roundoff).
    pub fn evolve(
        &self,
        state: &FullTwoModeState,
        t: f64,
        unit: TimeUnit,
    ) -> Result<FullTwoModeState> {
        if state.cutoff != self.cutoff {
            return Err(Error::CutoffTooSmall {
                cutoff: self.cutoff,
                total: state.cutoff,
            });
        }
        let dim = self.energies.len();
        let mut dense = vec![Complex64::ZERO; dim];
        for (&pair, &amp) in &state.amps {
            dense[box_index(pair, self.cutoff)] = amp;
        }
        // coefficients in the eigenbasis: c_k = sum_i V[i,k] psi_i
        let rate = unit.radians_per_unit_energy();
        let mut out = vec![Complex64::ZERO; dim];
        for k in 0..dim {
            let mut ck = Complex64::ZERO;
            for (i, amp) in dense.iter().enumerate() {
                ck += self.modes[(i, k)] * amp;
            }
            let phase = Complex64::from_polar(1.0, -self.energies[k] * t * rate);
            let ck = ck * phase;
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += self.modes[(i, k)] * ck;
            }
        }
        let raw_norm = out.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (raw_norm - 1.0).abs() > 1e-12 {
            return Err(Error::Numerical(format!(
                "full propagation norm drifted to {raw_norm} at t = {t}"
            )));
        }
        let c1 = self.cutoff as usize + 1;
        FullTwoModeState::new(
            self.cutoff,
            out.into_iter()
                .enumerate()
                .map(|(idx, amp)| (FockPair::new((idx / c1) as u32, (idx % c1) as u32), amp)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn embed_round_trip_preserves_amplitudes_and_moments() {
        let s = SubspaceState::canonical(3, 3).unwrap(); // |0, 3>
        let full = embed(&s, 6).unwrap();
        assert_eq!(full.amp(FockPair::new(0, 3)), Complex64::ONE);
        let nb = full.expectation(NormalMonomial::new(0, 0, 1, 1));
        assert!((nb - c(3.0, 0.0)).norm() < 1e-15);
        let back = full.restrict_to_block(3).unwrap();
        assert_eq!(back.amps(), s.amps());
    }

    #[test]
    fn embed_rejects_small_cutoff() {
        let s = SubspaceState::canonical(5, 2).unwrap();
        assert!(matches!(
            embed(&s, 4),
            Err(Error::CutoffTooSmall {
                cutoff: 4,
                total: 5
            })
        ));
    }

    #[test]
    fn expectation_matches_block_engine_on_random_states() {
        // The oracle: every normally ordered monomial up to power 2 per leg,
        // on random block states, must agree with the block-restricted engine.
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(20_240_201);
        for total in 0..=4u32 {
            for _ in 0..8 {
                let s = SubspaceState::random(total, &mut rng);
                let full = embed(&s, total + 2).unwrap();
                for p in 0..=2u32 {
                    for q in 0..=2u32 {
                        for r in 0..=2u32 {
                            for s_pow in 0..=2u32 {
                                let mono = NormalMonomial::new(p, q, r, s_pow);
                                let lhs = s.expectation(mono);
                                let rhs = full.expectation(mono);
                                assert!(
                                    (lhs - rhs).norm() < 1e-12,
                                    "N={total} mono={mono:?}: block {lhs} vs full {rhs}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn superposition_across_blocks_has_coherent_single_ladder_moment() {
        // (|0,0> + |0,1>)/sqrt(2) is NOT confined to one block: <b> = 1/2.
        // The full representation must see it even though every block state
        // gives exactly zero.
        let s = FullTwoModeState::new(
            2,
            [
                (FockPair::new(0, 0), c(1.0, 0.0)),
                (FockPair::new(0, 1), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        let b = s.expectation(NormalMonomial::new(0, 0, 0, 1));
        assert!((b - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn block_weights_sum_to_one() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        let s = SubspaceState::random(4, &mut rng);
        let full = embed(&s, 5).unwrap();
        assert!((full.block_weight(4) - 1.0).abs() < 1e-14);
        assert_eq!(full.block_weight(3), 0.0);
        assert_eq!(full.block_weight(5), 0.0);
    }
}
