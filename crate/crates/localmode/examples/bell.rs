//! Deterministic generation of Bell-like states from a single local quantum.
//!
//! In the one-quantum block the Hamiltonian is a 2x2 system: starting from
//! |0,1> the excitation Rabi-oscillates to |1,0> and back with period
//! pi/epsilon. A quarter of the way through the exchange the state is the
//! maximally entangled combination (|0,1> + i|1,0>)/sqrt(2), and at three
//! quarters it is the orthogonal partner (|0,1> - i|1,0>)/sqrt(2). This
//! example tracks both overlaps and verifies the arrival times.
//!
//! Run with: cargo run --example bell

use localmode::{
    bell_minus_arrival, bell_overlaps, bell_plus_arrival, evolve, fidelity,
    population_exchange_period, FockPair, ModelParams, SubspaceHamiltonian, SubspaceState,
    TimeSpec,
};

fn main() {
    let params = ModelParams::representative();
    let block = SubspaceHamiltonian::new(1, &params).expect("block");
    let initial = SubspaceState::from_fock(FockPair::new(0, 1));

    let period = population_exchange_period(&params);
    let t_plus = bell_plus_arrival(&params);
    let t_minus = bell_minus_arrival(&params);
    println!("exchange period pi/epsilon = {period:.6} phase units");
    println!("predicted Bell arrivals:  plus at {t_plus:.6}, minus at {t_minus:.6}");
    println!();

    // Scan one full period and print the two Bell overlaps on a coarse grid.
    let spec = TimeSpec::linspace(period, 17, Default::default()).expect("grid");
    println!("  phase        |<B+|psi>|      |<B-|psi>|      |<psi(0)|psi>|");
    for &t in spec.times() {
        let state = evolve(&block, &initial, t, Default::default()).expect("evolve");
        let (p, m) = bell_overlaps(&state).expect("N = 1");
        let f = fidelity(&initial, &state).expect("same block");
        println!("  {t:9.5}   {p:13.8}   {m:13.8}   {f:15.8}");
    }

    println!();

    // Exact checks at the special times.
    let at = |t: f64| evolve(&block, &initial, t, Default::default()).expect("evolve");
    let (p_plus, _) = bell_overlaps(&at(t_plus)).expect("N = 1");
    let (_, m_minus) = bell_overlaps(&at(t_minus)).expect("N = 1");
    println!(
        "overlap with B+ at t = period/4:   1 - {:.3e}",
        1.0 - p_plus
    );
    println!(
        "overlap with B- at t = 3*period/4: 1 - {:.3e}",
        1.0 - m_minus
    );

    let transferred = at(0.5 * period);
    let target = SubspaceState::from_fock(FockPair::new(1, 0));
    let f_transfer = fidelity(&target, &transferred).expect("same block");
    println!(
        "population transfer |0,1> -> |1,0> at half period: fidelity 1 - {:.3e}",
        1.0 - f_transfer
    );

    let revived = at(period);
    let f_revival = fidelity(&initial, &revived).expect("same block");
    println!(
        "revival at a full period: fidelity 1 - {:.3e}",
        1.0 - f_revival
    );
}
