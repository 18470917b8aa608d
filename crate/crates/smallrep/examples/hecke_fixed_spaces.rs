//! The ⋆-fixed vectors in S(a) coincide with the classical invariants
//! S(a)^W for every parameter value — numeric, geometric, or the formal
//! symbol k.

use smallrep::hecke::{sh_fixed_space, HeckeAlgebra};
use smallrep::polyalg::invariant_basis;
use smallrep::rootsys::mult::MultiplicityFunction;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::{rint, KRat};

fn main() {
    let d = 6u32;
    for (f, r) in [('A', 2), ('B', 2), ('G', 2)] {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);

        let mut cumulative = Vec::new();
        let mut acc = 0usize;
        for e in 0..=d {
            acc += invariant_basis(&w, rs.rank, e).len();
            cumulative.push(acc);
        }
        println!("{}: classical invariant dims (cumulative) {:?}", rs.type_name(), cumulative);

        for kval in [rint(0), rint(1), rint(-1)] {
            let h = HeckeAlgebra::new(&rs, &w, vec![kval.clone(); w.root_orbits.len()]).unwrap();
            let dims: Vec<usize> = (0..=d).map(|t| sh_fixed_space(&h, t).unwrap().len()).collect();
            assert_eq!(dims, cumulative);
            println!("  k = {kval}: fixed dims match");
        }

        let m = MultiplicityFunction::geometric_complex(&w);
        let h = HeckeAlgebra::from_mult(&rs, &w, &m).unwrap();
        let dims: Vec<usize> = (0..=d).map(|t| sh_fixed_space(&h, t).unwrap().len()).collect();
        assert_eq!(dims, cumulative);
        println!("  geometric k: fixed dims match");

        let h = HeckeAlgebra::<KRat>::generic(&rs, &w);
        let dims: Vec<usize> = (0..=d).map(|t| sh_fixed_space(&h, t).unwrap().len()).collect();
        assert_eq!(dims, cumulative);
        println!("  generic symbol: fixed dims match");

        // one actual fixed vector, for flavor
        let h = HeckeAlgebra::new(&rs, &w, vec![rint(1); w.root_orbits.len()]).unwrap();
        let basis = sh_fixed_space(&h, 2).unwrap();
        println!("  a degree-2 fixed vector at k=1: {}\n", basis.last().unwrap());
    }
}
