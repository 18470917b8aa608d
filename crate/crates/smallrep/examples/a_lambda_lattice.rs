//! The |W|-dimensional module A(λ) at k̃ = −1, realized on harmonic
//! representatives, and its full submodule lattice from generalized weight
//! spaces.

use smallrep::hecke::alambda::{build_a_lambda, submodule_lattice};
use smallrep::hecke::HeckeAlgebra;
use smallrep::report::cell_rat_vec;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::{rat, rint};

fn main() {
    // B2 away from every wall: irreducible
    let rs = build_root_system('B', 2).unwrap();
    let w = WeylGroup::new(&rs);
    let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1), rint(-1)]).unwrap();
    let lam = [rat(7, 3), rat(1, 5)];
    let m = build_a_lambda(&h, &lam).unwrap();
    println!("B2, λ = {}:", cell_rat_vec(&lam));
    println!("  dim A(λ) = {} = |W|", m.dim);
    println!("  basis degrees: {:?}", m.basis_degree);
    let lat = submodule_lattice(&m).unwrap();
    println!(
        "  weight spaces all lines: {}, submodule dims: {:?}, irreducible: {}",
        lat.complete, lat.dims, lat.irreducible
    );

    // A1 on the wall λ(α∨) = 1: a proper line appears
    let rs = build_root_system('A', 1).unwrap();
    let w = WeylGroup::new(&rs);
    let h = HeckeAlgebra::new(&rs, &w, vec![rint(-1)]).unwrap();
    for lam in [vec![rat(1, 3)], vec![rat(1, 2)]] {
        let m = build_a_lambda(&h, &lam).unwrap();
        let lat = submodule_lattice(&m).unwrap();
        println!(
            "A1, λ = {}: dims {:?}, hasse {:?}, irreducible: {}",
            cell_rat_vec(&lam),
            lat.dims,
            lat.hasse,
            lat.irreducible
        );
    }
}
