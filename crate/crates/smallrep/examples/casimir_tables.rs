//! The two Casimir tables side by side: Ω_W on each W-irreducible and
//! Ω_g = ⟨λ, λ+2ρ⟩ on each swept highest weight, then the cross check
//! that both act by the same scalar where they meet — on the single-orbit
//! part of the zero weight space.

use smallrep::report::{cell_rat, cell_rat_vec};
use smallrep::repth::chars::character_table;
use smallrep::repth::{
    casimir_scalar, construct_irrep, omega_w_scalar, root_lattice_weights_below,
    verify_casimir_identity, weyl_dim,
};
use smallrep::rootsys::chevalley::build_chevalley;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::rint;

fn main() {
    let rs = build_root_system('B', 2).unwrap();
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w).unwrap();

    println!("Ω_W on the irreducibles of W(B2):");
    for chi in 0..table.n_chars() {
        println!(
            "  {:6} {}",
            table.names[chi],
            cell_rat(&omega_w_scalar(&rs, &w, &table, chi))
        );
    }

    println!("\nΩ_g on V(λ), root-lattice λ with dim ≤ 40:");
    for lambda in root_lattice_weights_below(&rs, 40).unwrap() {
        println!(
            "  σ_{:7} dim {:3}  {}",
            cell_rat_vec(&lambda),
            weyl_dim(&rs, &lambda).unwrap(),
            cell_rat(&casimir_scalar(&rs, &lambda))
        );
    }

    // σ_(2,1) is the interesting row: quasi-small but not small, scalar 2
    let cd = build_chevalley(&rs).unwrap();
    let v = construct_irrep(&rs, &cd, &[rint(2), rint(1)], 40).unwrap();
    let rep = verify_casimir_identity(&rs, &cd, &w, &table, &v).unwrap();
    println!(
        "\nσ_(2,1): Ω_g scalar {} on all of V, Ω_W the same on V^h_single: {} (single dim {})",
        cell_rat(&rep.scalar),
        rep.omega_w_matches_on_single,
        rep.single_dim
    );
    assert!(rep.omega_g_is_scalar && rep.omega_w_matches_on_single);
}
