//! Invariant theory of the reflection action on S(a): graded dimensions
//! of invariants and harmonics, dim H = |W|, top degree = #Σ⁺, and the
//! product decomposition S ≅ S^W ⊗ H degree by degree.

use smallrep::polyalg::{check_product_basis, harmonic_basis};
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};

fn main() {
    for (f, r) in [('A', 1), ('A', 2), ('B', 2), ('G', 2)] {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);
        let top = rs.n_positive as u32;
        let gb = harmonic_basis(&rs, &w, top);

        println!("{}:", rs.type_name());
        println!("  invariant dims by degree: {:?}", gb.invariant_dims());
        println!("  harmonic dims by degree:  {:?}", gb.harmonic_dims());
        assert_eq!(gb.total_harmonic_dim(), w.order());
        assert_eq!(gb.top_harmonic_degree(), top);
        println!(
            "  dim H = {} = |W|, top degree = {} = #positive roots",
            gb.total_harmonic_dim(),
            gb.top_harmonic_degree()
        );

        let full = check_product_basis(&gb, top).unwrap();
        println!("  S^W · H fills S: dims {:?}\n", full);
    }
}
