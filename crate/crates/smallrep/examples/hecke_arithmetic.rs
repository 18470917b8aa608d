//! Arithmetic in the degenerate affine Hecke algebra H = S(a) ⊗ C[W]: the
//! cross relation, the ⋆-action on polynomials, the center, and the
//! rank-one projection polynomials.

use smallrep::hecke::{
    center_check, hecke_mul, rank1_hc_polynomial, star_simple, HeckeAlgebra, HeckeElement,
};
use smallrep::polyalg::{reynolds, Poly};
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::{rat, rint, Rat};

fn main() {
    let rs = build_root_system('B', 2).unwrap();
    let w = WeylGroup::new(&rs);
    let h = HeckeAlgebra::new(&rs, &w, vec![rint(1), rat(-1, 2)]).unwrap();

    // cross relation: s_1 · x ≠ x^{s_1} · s_1 in general; the difference is
    // the k-twist. Multiply both orders and list the group components.
    let x = HeckeElement::from_poly(Poly::<Rat>::var(0, 2));
    let s1 = HeckeElement::from_group(2, w.gen_index[0]);
    let sx = hecke_mul(&h, &s1, &x).unwrap();
    let xs = hecke_mul(&h, &x, &s1).unwrap();
    println!("s1·x1 components:");
    for (g, f) in &sx.terms {
        println!("  w#{g}: {f}");
    }
    println!("x1·s1 components:");
    for (g, f) in &xs.terms {
        println!("  w#{g}: {f}");
    }

    // the ⋆-action deforms the reflection by a divided difference
    let f = Poly::<Rat>::var(0, 2).pow(2);
    for i in 0..2 {
        println!("s{} ⋆ x1^2 = {}", i + 1, star_simple(&h, i, &f).unwrap());
    }

    // the center of H is exactly S(a)^W
    let avg = reynolds(&w, &f);
    let rep = center_check(&h, &avg, 4).unwrap();
    println!("Reynolds(x1^2) = {avg}");
    println!(
        "  central: {}, W-invariant: {}",
        rep.is_central, rep.is_invariant
    );
    let rep = center_check(&h, &f, 4).unwrap();
    println!(
        "x1^2 alone: central: {}, witness simple: {:?}",
        rep.is_central, rep.witness
    );

    // rank-one projections in the coroot variable
    for (i, j) in [(1u32, 0u32), (1, 1), (0, 3)] {
        let p = rank1_hc_polynomial(i, j, &rat(3, 1), &rat(1, 2));
        println!("p_{{{i},{j}}} at m=(3, 1/2), in the coroot variable: {p}");
    }
}
