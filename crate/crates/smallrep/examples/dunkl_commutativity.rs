//! Rational Dunkl operators T(ξ) = ∂_ξ + Σ_{α>0} k(α)/2 ⟨α,ξ⟩ Δ_α: apply
//! one to a monomial, then check pairwise commutativity and W-equivariance
//! for several multiplicity functions.

use smallrep::dunkl::{dunkl_commutator_check, dunkl_equivariance_check, DunklOperator};
use smallrep::polyalg::{Mono, Poly};
use smallrep::rootsys::mult::MultiplicityFunction;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::{rat, rint, Rat};

fn main() {
    let rs = build_root_system('B', 2).unwrap();
    let w = WeylGroup::new(&rs);

    // a multiplicity function is constant on root orbits; B2 has two
    let kf = MultiplicityFunction::from_orbit_values(&w, &[rat(1, 2), rat(-3, 4)]).unwrap();
    let t0 = DunklOperator::new(&rs, &w, &kf, vec![rint(1), rint(0)]);

    let f = Poly::<Rat>::monomial(Mono(vec![2, 1]), rint(1));
    println!("T(e1) applied to x1^2 x2:");
    println!("  {}", t0.apply(&f).unwrap());

    for vals in [
        vec![rint(0), rint(0)],
        vec![rint(1), rint(1)],
        vec![rat(2, 3), rat(-1, 5)],
    ] {
        let kf = MultiplicityFunction::from_orbit_values(&w, &vals).unwrap();
        let rep = dunkl_commutator_check(
            &rs,
            &w,
            &kf,
            &[rint(1), rint(0)],
            &[rint(0), rint(1)],
            5,
        )
        .unwrap();
        let eq = dunkl_equivariance_check(&rs, &w, &kf, &[rint(1), rint(0)], 4).unwrap();
        println!(
            "k = ({}, {}): [T(e1), T(e2)] = 0 on S^≤5: {}, equivariance: {}",
            vals[0], vals[1], rep.ok, eq
        );
        assert!(rep.ok && eq);
    }
}
