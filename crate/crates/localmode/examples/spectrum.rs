//! Exact vibrational spectra of the coupled two-oscillator blocks.
//!
//! The Hamiltonian conserves the total quantum number N, so it splits into
//! (N+1)-dimensional blocks spanned by |N-j, j>. This example diagonalizes
//! the first few blocks for the representative parameter set, prints the
//! exact level energies together with their eigenvector compositions, and
//! compares the fundamental region across the three built-in molecule
//! parameter sets.
//!
//! Run with: cargo run --example spectrum

use localmode::{ModelParams, SubspaceHamiltonian};

fn print_block(total: u32, params: &ModelParams) {
    let h = SubspaceHamiltonian::new(total, params).expect("valid block");
    println!("block N = {total} (dimension {}):", total + 1);
    for (k, energy) in h.energies().iter().enumerate() {
        let v = h.eigenstate(k);
        let composition: Vec<String> = v
            .amps()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > 1e-3)
            .map(|(j, a)| format!("{:+.4}|{},{}>", a.re, total - j as u32, j))
            .collect();
        println!(
            "  level {k}: E = {energy:12.4} 1/cm   {}",
            composition.join(" ")
        );
    }
    println!();
}

fn main() {
    let params = ModelParams::representative();
    println!(
        "representative parameters: omega = {} 1/cm, gamma = {} 1/cm, epsilon = {} 1/cm",
        params.omega, params.gamma, params.epsilon
    );
    println!();

    // The one-quantum block is exactly solvable: E = omega - gamma -/+ epsilon.
    for total in 1..=4 {
        print_block(total, &params);
    }

    println!("fundamental pair (N = 1) for the three built-in molecules:");
    for (name, p) in [
        ("dichloromethane", ModelParams::dichloromethane()),
        ("dibromomethane", ModelParams::dibromomethane()),
        ("diiodomethane", ModelParams::diiodomethane()),
    ] {
        let h = SubspaceHamiltonian::new(1, &p).expect("valid block");
        println!(
            "  {name:16} E0 = {:10.4}  E1 = {:10.4}  splitting = {:8.4} (= 2 epsilon = {:.4})",
            h.energies()[0],
            h.energies()[1],
            h.energies()[1] - h.energies()[0],
            2.0 * p.epsilon
        );
    }

    // The nearly degenerate N = 4 edge pair: the two lowest levels of the
    // four-quantum block differ only by a high-order tunneling splitting.
    let h4 = SubspaceHamiltonian::new(4, &params).expect("valid block");
    println!();
    println!(
        "N = 4 local-mode pair splitting: {:.6} 1/cm (levels {:.4} and {:.4})",
        h4.energies()[1] - h4.energies()[0],
        h4.energies()[0],
        h4.energies()[1]
    );
}
