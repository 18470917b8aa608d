//! From words in the Chevalley letters to Harish-Chandra images: PBW
//! normal forms, the shifted projection γ̃, the Casimir element, and the
//! equivariance test that separates small modules from the rest.

use smallrep::envelop::hom::{hecke_equivariance_test, hom_copies};
use smallrep::envelop::{casimir_element, gamma_tilde, pbw_normalize};
use smallrep::report::poly_string;
use smallrep::repth::chars::character_table;
use smallrep::repth::{casimir_scalar, construct_irrep, is_small, zero_weight_decomposition};
use smallrep::rootsys::chevalley::build_chevalley;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};
use smallrep::scalar::{rat, rint, Rat};

fn main() {
    let rs = build_root_system('A', 1).unwrap();
    let cd = build_chevalley(&rs).unwrap();
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w).unwrap();

    // letters for sl2 are ordered f < t < e
    let (f, e) = (0usize, 2usize);

    // two cubic words and their normal forms
    for word in [vec![e, f, e], vec![e, e, f]] {
        let nf = pbw_normalize(&cd, &word, 4).unwrap();
        let letters: Vec<&str> = word.iter().map(|&l| ["f", "t", "e"][l]).collect();
        print!("{} = ", letters.join("·"));
        let terms: Vec<String> = nf
            .terms
            .iter()
            .map(|(exp, c)| format!("{c}·f^{}t^{}e^{}", exp[0], exp[1], exp[2]))
            .collect();
        println!("{}", terms.join(" + "));
    }

    // the Casimir element and its image under γ̃
    let omega = casimir_element(&cd);
    let g = gamma_tilde(&rs, &cd, &omega);
    println!("γ̃(Ω) = {}", poly_string(&g));
    for lam in [vec![rint(1)], vec![rint(2)], vec![rat(5, 2)]] {
        let rho = rs.rho();
        let shifted: Vec<Rat> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let val = g.eval(&shifted);
        assert_eq!(val, casimir_scalar(&rs, &lam));
        println!("  γ̃(Ω)(λ+ρ) = {val} = ⟨λ, λ+2ρ⟩ at λ = ({})", lam[0]);
    }

    // equivariance of the restricted images: holds for the adjoint module
    // (small), breaks for the 5-dimensional one, with an explicit witness
    for lam in [vec![rint(1)], vec![rint(2)]] {
        let v = construct_irrep(&rs, &cd, &lam, 10).unwrap();
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        let copies = hom_copies(&rs, &cd, &v, 4).unwrap();
        println!(
            "λ = ({}), dim {} (small: {}):",
            lam[0],
            v.dim(),
            is_small(&rs, &lam).unwrap()
        );
        for copy in &copies {
            let rep = hecke_equivariance_test(&rs, &cd, &w, &zdec, &v, copy).unwrap();
            match &rep.witness {
                None => println!("  copy in degree {}: equivariant", copy.degree),
                Some(wit) => println!(
                    "  copy in degree {}: fails at s_{}: s⋆ψ = {} but ψ∘s̃ = {}",
                    copy.degree,
                    wit.simple + 1,
                    poly_string(&wit.lhs),
                    poly_string(&wit.rhs)
                ),
            }
        }
    }
}
