//! Highest-weight machinery on exact block matrices: Weyl dimensions,
//! Freudenthal multiplicities, the W-action on zero weight spaces, and the
//! multiplicity of V(λ) in V(ρ) ⊗ V(ρ)* computed twice.

use smallrep::report::cell_rat_vec;
use smallrep::repth::chars::character_table;
use smallrep::repth::{
    construct_irrep, freudenthal_weights, quasi_small_multiplicity, verify_bracket_relations,
    weyl_dim, zero_weight_decomposition,
};
use smallrep::rootsys::chevalley::build_chevalley;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::rint;

fn main() {
    let rs = build_root_system('B', 2).unwrap();
    let cd = build_chevalley(&rs).unwrap();
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w).unwrap();

    let lam = vec![rint(2), rint(1)];
    println!("B2, λ = (2,1): dim = {}", weyl_dim(&rs, &lam).unwrap());
    println!("weight multiplicities:");
    for (mu, m) in freudenthal_weights(&rs, &lam).unwrap() {
        if m > 1 {
            println!("  {}: {}", cell_rat_vec(&mu), m);
        }
    }

    let v = construct_irrep(&rs, &cd, &lam, 40).unwrap();
    verify_bracket_relations(&cd, &v, false).unwrap();
    println!("bracket relations hold on V(λ)");

    let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
    println!(
        "V^h: dim {} = single {} ⊕ double {}; single as a W-module: {:?}",
        zdec.vh_dim,
        zdec.single.dim(),
        zdec.double.dim(),
        zdec.single_char
    );

    // multiplicity in V(ρ)⊗V(ρ)*, once by matrices, once by characters —
    // the two routes are asserted equal inside
    for lam in [vec![rint(0), rint(0)], vec![rint(1), rint(1)], vec![rint(2), rint(1)]] {
        let m = quasi_small_multiplicity(&rs, &cd, &lam, 400).unwrap();
        println!(
            "mult of V({}) in V(ρ)⊗V(ρ)*: {}",
            cell_rat_vec(&lam),
            m
        );
    }
}
