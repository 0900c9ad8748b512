//! Independent-oracle checks: the block propagator against brute-force
//! evolution on the full two-mode box, and the block moment engine against
//! direct ladder algebra over every stored occupation.

use localmode::{
    embed, evolve, FockPair, FullPropagator, ModelParams, NormalMonomial, SubspaceHamiltonian,
    SubspaceState, TimeUnit,
};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

const CUTOFF: u32 = 8;

fn random_state(total: u32, seed: u64) -> SubspaceState {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    SubspaceState::random(total, &mut rng)
}

/// 200 random states across the first four blocks: subspace propagation and
/// full-box propagation must agree amplitude by amplitude within 1e-9.
#[test]
fn block_propagation_matches_full_box_on_200_random_states() {
    let params = ModelParams::representative();
    let t_max = 20.0 * std::f64::consts::PI / params.epsilon;
    let full = FullPropagator::new(CUTOFF, &params).expect("box propagator");

    let mut worst = 0.0f64;
    let mut count = 0u32;
    for total in 1..=4u32 {
        let block = SubspaceHamiltonian::new(total, &params).expect("block");
        for i in 0..50u64 {
            let state = random_state(total, 1000 * u64::from(total) + i);
            let t = (i as f64 + 1.0) / 50.0 * t_max;
            let blockwise = evolve(&block, &state, t, TimeUnit::Phase).expect("block evolve");
            let boxed = embed(&state, CUTOFF).expect("embed");
            let boxwise = full.evolve(&boxed, t, TimeUnit::Phase).expect("box evolve");
            for (j, &amp) in blockwise.amps().iter().enumerate() {
                let pair = FockPair::new(total - j as u32, j as u32);
                let diff = (boxwise.amp(pair) - amp).norm();
                worst = worst.max(diff);
                assert!(
                    diff <= 1e-9,
                    "amplitude mismatch {diff:.3e} on |{},{}> (N = {total}, state {i}, t = {t:.4})",
                    pair.n,
                    pair.m
                );
            }
            count += 1;
        }
    }
    assert_eq!(count, 200);
    println!("200 states, worst per-amplitude deviation = {worst:.3e}");
}

/// The box evolution never moves amplitude out of the starting block: the
/// leak (probability outside n + m = N) stays at rounding level for N <= 4.
#[test]
fn full_box_evolution_conserves_the_block() {
    let params = ModelParams::representative();
    let full = FullPropagator::new(CUTOFF, &params).expect("box propagator");
    let t_max = 20.0 * std::f64::consts::PI / params.epsilon;

    for total in 0..=4u32 {
        // Every canonical basis state plus a few random superpositions.
        let mut states: Vec<SubspaceState> = (0..=total)
            .map(|j| SubspaceState::from_fock(FockPair::new(total - j, j)))
            .collect();
        for seed in 0..3u64 {
            states.push(random_state(total, 7000 + 10 * u64::from(total) + seed));
        }
        for (k, state) in states.iter().enumerate() {
            let boxed = embed(state, CUTOFF).expect("embed");
            for step in 1..=5u32 {
                let t = f64::from(step) / 5.0 * t_max;
                let out = full.evolve(&boxed, t, TimeUnit::Phase).expect("box evolve");
                let leak = 1.0 - out.block_weight(total);
                assert!(
                    leak <= 1e-12,
                    "block leak {leak:.3e} for N = {total}, state {k}, t = {t:.4}"
                );
                let norm_defect = (out.norm() - 1.0).abs();
                assert!(norm_defect <= 1e-12, "box norm defect {norm_defect:.3e}");
            }
        }
    }
}

/// The block moment engine (running square-root products plus the selection
/// rule) must agree with brute-force ladder algebra on the box, which never
/// consults the selection rule.
#[test]
fn block_moments_match_brute_force_ladder_algebra() {
    let monomials = [
        NormalMonomial::new(1, 1, 0, 0),
        NormalMonomial::new(0, 0, 1, 1),
        NormalMonomial::new(1, 0, 0, 1),
        NormalMonomial::new(0, 1, 1, 0),
        NormalMonomial::new(1, 1, 1, 1),
        NormalMonomial::new(2, 2, 0, 0),
        NormalMonomial::new(2, 0, 0, 2),
        NormalMonomial::new(0, 2, 2, 0),
        NormalMonomial::new(1, 0, 0, 0),
        NormalMonomial::new(0, 0, 0, 1),
        NormalMonomial::new(2, 0, 0, 0),
        NormalMonomial::new(1, 0, 1, 0),
        NormalMonomial::new(1, 2, 1, 0),
    ];
    for total in 0..=4u32 {
        for seed in 0..5u64 {
            let state = random_state(total, 31_000 + 10 * u64::from(total) + seed);
            let boxed = embed(&state, CUTOFF).expect("embed");
            for mono in monomials {
                let fast = state.expectation(mono);
                let slow = boxed.expectation(mono);
                assert!(
                    (fast - slow).norm() <= 1e-12,
                    "moment mismatch for {mono:?} on N = {total}: {fast} vs {slow}"
                );
            }
        }
    }
}

/// Propagating in picoseconds must agree with propagating the equivalent
/// phase: theta = 2 pi c t with c in cm per ps.
#[test]
fn picosecond_and_phase_clocks_agree() {
    let params = ModelParams::representative();
    let block = SubspaceHamiltonian::new(3, &params).expect("block");
    let state = random_state(3, 99);
    let rate = localmode::dynamics::RADIANS_PER_PS_PER_WAVENUMBER;
    for t_ps in [0.05, 0.2, 1.0, 5.0] {
        let via_ps = evolve(&block, &state, t_ps, TimeUnit::Picoseconds).expect("ps evolve");
        let via_phase = evolve(&block, &state, t_ps * rate, TimeUnit::Phase).expect("phase evolve");
        // (E * t) * rate and E * (t * rate) differ by one rounding each, so
        // the phases disagree by ~|theta| * 1e-16; theta reaches ~1e4 rad.
        for (a, b) in via_ps.amps().iter().zip(via_phase.amps()) {
            assert!((a - b).norm() <= 1e-10);
        }
    }
}
