//! Degree-by-degree comparison in the symmetric algebra: restriction maps
//! Hom_g(V, S(g)) into Hom_W(V^h, S(h)) injectively, and fills it exactly
//! when V is small. For sl2 the 5-dimensional module shows the first gap.

use smallrep::envelop::symg::sym_hom_copies;
use smallrep::repth::chars::character_table;
use smallrep::repth::{construct_irrep, is_small, zero_weight_decomposition};
use smallrep::rootsys::chevalley::build_chevalley;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::rint;

fn main() {
    let rs = build_root_system('A', 1).unwrap();
    let cd = build_chevalley(&rs).unwrap();
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w).unwrap();

    for c in [0i64, 1, 2] {
        let lam = vec![rint(c)];
        let v = construct_irrep(&rs, &cd, &lam, 10).unwrap();
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        let rep = sym_hom_copies(&rs, &cd, &w, &zdec, &v, 5).unwrap();
        println!(
            "λ = ({c}), dim {} — small: {}",
            v.dim(),
            is_small(&rs, &lam).unwrap()
        );
        println!("  deg  Hom_g  image  Hom_W");
        for row in &rep.rows {
            println!(
                "  {:3}  {:5}  {:5}  {:5}",
                row.degree, row.hom_g, row.image, row.hom_w
            );
        }
        match rep.first_gap {
            None => println!("  surjective in every degree\n"),
            Some(d) => println!("  first gap at degree {d}\n"),
        }
    }
}
