//! Desk-scale enveloping algebra U(g) on top of a Chevalley basis.
//!
//! Elements are kept in PBW normal form with respect to the letter order
//! f_γ < t_i < e_γ (the order `ChevalleyData` fixes). With that order the
//! complement of U(h) inside U(g) — namely n̄U(g) + U(g)n — is exactly the
//! span of the normal monomials containing an f or an e factor, so the
//! Harish-Chandra projection is a monomial filter followed by the ρ-shift.
//!
//! Normalization rewrites x_b·x_a → x_a·x_b + [x_b, x_a] at an adjacent
//! inversion. Each step either shortens the word (bracket terms) or keeps
//! the length and removes an inversion, so (length, inversions) is a
//! well-founded termination measure. Confluence — independence of the
//! rewriting order — is not taken on faith: the test suite compares two
//! opposite strategies on hundreds of random words per algebra.

pub mod coldet;
pub mod hom;
pub mod symg;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::Poly;
use crate::rootsys::chevalley::ChevalleyData;
use crate::rootsys::RootSystem;
use crate::scalar::Rat;

/// An element of U(g) in PBW normal form: exponent vectors over the letter
/// basis, mapped to rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwElement {
    pub nletters: usize,
    pub terms: BTreeMap<Vec<u32>, Rat>,
}

impl PbwElement {
    pub fn zero(nletters: usize) -> Self {
        PbwElement {
            nletters,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nletters: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nletters], Rat::one());
        PbwElement { nletters, terms }
    }

    /// The single letter x_l as an element.
    pub fn letter(nletters: usize, l: usize) -> Self {
        let mut exp = vec![0u32; nletters];
        exp[l] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Rat::one());
        PbwElement { nletters, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Filtration degree: the maximal total exponent, `None` for 0.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            // re-borrow to remove; key reconstruction is cheaper than the
            // entry API gymnastics
            let dead: Vec<Vec<u32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nletters, other.nletters);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nletters);
        }
        PbwElement {
            nletters: self.nletters,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// The word (ascending letter sequence) of a normal monomial.
    pub fn word_of(exp: &[u32]) -> Vec<usize> {
        let mut w = Vec::new();
        for (l, &e) in exp.iter().enumerate() {
            for _ in 0..e {
                w.push(l);
            }
        }
        w
    }
}

/// Which adjacent inversion a rewriting step picks. Both must produce the
/// same normal form; the suite checks that on random words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    FirstInversion,
    LastInversion,
}

/// Normalize a linear combination of letter words.
pub fn pbw_normalize_words(
    cd: &ChevalleyData,
    words: Vec<(Vec<usize>, Rat)>,
    cap: usize,
    strategy: RewriteStrategy,
) -> Result<PbwElement> {
    let dim = cd.dim();
    let mut out = PbwElement::zero(dim);
    let mut work = words;
    while let Some((word, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        if word.len() > cap {
            return Err(Error::DegreeCapExceeded {
                degree: word.len(),
                cap,
            });
        }
        let n1 = word.len().saturating_sub(1);
        let pos = match strategy {
            RewriteStrategy::FirstInversion => (0..n1).find(|&i| word[i] > word[i + 1]),
            RewriteStrategy::LastInversion => (0..n1).rev().find(|&i| word[i] > word[i + 1]),
        };
        match pos {
            None => {
                let mut exp = vec![0u32; dim];
                for &l in &word {
                    exp[l] += 1;
                }
                out.add_term(exp, c);
            }
            Some(i) => {
                for (l, b) in cd.bracket(word[i], word[i + 1]) {
                    let mut shorter = word[..i].to_vec();
                    shorter.push(l);
                    shorter.extend_from_slice(&word[i + 2..]);
                    work.push((shorter, &c * &b));
                }
                let mut swapped = word;
                swapped.swap(i, i + 1);
                work.push((swapped, c));
            }
        }
    }
    Ok(out)
}

/// Normal form of a single product of letters.
pub fn pbw_normalize(cd: &ChevalleyData, word: &[usize], cap: usize) -> Result<PbwElement> {
    pbw_normalize_words(
        cd,
        vec![(word.to_vec(), Rat::one())],
        cap,
        RewriteStrategy::FirstInversion,
    )
}

/// Product in U(g): concatenate normal words pairwise and renormalize.
pub fn pbw_mul(
    cd: &ChevalleyData,
    a: &PbwElement,
    b: &PbwElement,
    cap: usize,
) -> Result<PbwElement> {
    let mut words = Vec::new();
    for (ea, ca) in &a.terms {
        let wa = PbwElement::word_of(ea);
        for (eb, cb) in &b.terms {
            let mut w = wa.clone();
            w.extend(PbwElement::word_of(eb));
            words.push((w, ca * cb));
        }
    }
    pbw_normalize_words(cd, words, cap, RewriteStrategy::FirstInversion)
}

/// ad(x_l)·a = x_l·a − a·x_l. Preserves the filtration degree of `a`.
pub fn ad_letter(cd: &ChevalleyData, l: usize, a: &PbwElement, cap: usize) -> Result<PbwElement> {
    let mut words = Vec::new();
    for (e, c) in &a.terms {
        let w = PbwElement::word_of(e);
        let mut left = vec![l];
        left.extend(&w);
        let mut right = w;
        right.push(l);
        words.push((left, c.clone()));
        words.push((right, -c));
    }
    pbw_normalize_words(cd, words, cap, RewriteStrategy::FirstInversion)
}

/// Cartan weight of a normal monomial, in a*-coordinates.
pub fn monomial_weight(rs: &RootSystem, cd: &ChevalleyData, exp: &[u32]) -> Vec<Rat> {
    let mut w = vec![Rat::zero(); rs.rank];
    for (l, &e) in exp.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let lw = cd.letter_weight(rs, l);
        for (acc, x) in w.iter_mut().zip(&lw) {
            *acc += x * Rat::from_integer(e.into());
        }
    }
    w
}

/// Whether every monomial of `a` has zero Cartan weight.
pub fn has_weight_zero(rs: &RootSystem, cd: &ChevalleyData, a: &PbwElement) -> bool {
    a.terms
        .keys()
        .all(|e| monomial_weight(rs, cd, e).iter().all(|x| x.is_zero()))
}

/// The Harish-Chandra projection with shift: keep the pure-Cartan
/// monomials, read them as polynomials on a* through t_i ↦ ⟨·, α_i∨⟩, and
/// translate the argument by −ρ.
pub fn gamma_tilde(rs: &RootSystem, cd: &ChevalleyData, a: &PbwElement) -> Poly<Rat> {
    let n = cd.n_pos;
    let ell = cd.rank;
    let coroot: Vec<Poly<Rat>> = (0..ell)
        .map(|i| Poly::linear_rat(rs.coroot_form(i)))
        .collect();
    let mut out = Poly::zero(ell);
    for (exp, c) in &a.terms {
        let e_part = exp[..n].iter().any(|&x| x > 0) || exp[n + ell..].iter().any(|&x| x > 0);
        if e_part {
            continue;
        }
        let mut term = Poly::constant(ell, c.clone());
        for (i, cr) in coroot.iter().enumerate() {
            if exp[n + i] > 0 {
                term = term.mul(&cr.pow(exp[n + i]));
            }
        }
        out = out.add(&term);
    }
    let minus_rho: Vec<Rat> = rs.rho().iter().map(|x| -x).collect();
    out.translate(&minus_rho)
}

#[derive(Clone, Debug)]
pub struct GammaCommuteReport {
    pub gamma_d1d2: Poly<Rat>,
    pub gamma_d2d1: Poly<Rat>,
    pub product: Poly<Rat>,
}

/// γ̃ is multiplicative against weight-zero factors, in both orders. The
/// three quantities are computed independently and must coincide.
pub fn gamma_commute_check(
    rs: &RootSystem,
    cd: &ChevalleyData,
    d1: &PbwElement,
    d2: &PbwElement,
    cap: usize,
) -> Result<GammaCommuteReport> {
    if !has_weight_zero(rs, cd, d2) {
        return Err(Error::WeightNotZero);
    }
    let d1d2 = gamma_tilde(rs, cd, &pbw_mul(cd, d1, d2, cap)?);
    let d2d1 = gamma_tilde(rs, cd, &pbw_mul(cd, d2, d1, cap)?);
    let product = gamma_tilde(rs, cd, d1).mul(&gamma_tilde(rs, cd, d2));
    assert_eq!(d1d2, d2d1, "γ̃(D₁D₂) = γ̃(D₂D₁)");
    assert_eq!(d1d2, product, "γ̃(D₁D₂) = γ̃(D₁)γ̃(D₂)");
    Ok(GammaCommuteReport {
        gamma_d1d2: d1d2,
        gamma_d2d1: d2d1,
        product,
    })
}

/// The Killing-normalized Casimir Σ (K⁻¹)_{ij} t_i t_j + Σ_γ (e_γf_γ +
/// f_γe_γ)/B(e_γ, f_γ), as a normal-form element.
pub fn casimir_element(cd: &ChevalleyData) -> PbwElement {
    let n = cd.n_pos;
    let ell = cd.rank;
    let kinv = cd
        .killing_cartan
        .inverse()
        .expect("Killing form is nondegenerate on the Cartan");
    let mut words: Vec<(Vec<usize>, Rat)> = Vec::new();
    for i in 0..ell {
        for j in 0..ell {
            if !kinv.at(i, j).is_zero() {
                words.push((vec![n + i, n + j], kinv.at(i, j).clone()));
            }
        }
    }
    for p in 0..n {
        let c = Rat::one() / &cd.killing_ef[p];
        words.push((vec![n + ell + p, p], c.clone()));
        words.push((vec![p, n + ell + p], c));
    }
    pbw_normalize_words(cd, words, 2, RewriteStrategy::FirstInversion)
        .expect("quadratic words stay under the cap")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repth::casimir_scalar;
    use crate::rootsys::chevalley::build_chevalley;
    use crate::rootsys::{build_root_system, RootSystem};
    use crate::scalar::{rat, rint};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn sl2() -> (RootSystem, ChevalleyData) {
        let rs = build_root_system('A', 1).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        (rs, cd)
    }

    fn mono(nl: usize, pairs: &[(usize, u32)]) -> Vec<u32> {
        let mut e = vec![0u32; nl];
        for &(l, x) in pairs {
            e[l] = x;
        }
        e
    }

    #[test]
    fn single_letters_and_defining_relation() {
        let (_, cd) = sl2();
        // letters: 0 = f, 1 = t, 2 = e
        for l in 0..3 {
            let nf = pbw_normalize(&cd, &[l], 6).unwrap();
            assert_eq!(nf, PbwElement::letter(3, l));
        }
        // e·f = f·e + t
        let ef = pbw_normalize(&cd, &[2, 0], 6).unwrap();
        let mut expect = PbwElement::zero(3);
        expect.add_term(mono(3, &[(0, 1), (2, 1)]), rint(1));
        expect.add_term(mono(3, &[(1, 1)]), rint(1));
        assert_eq!(ef, expect);
    }

    #[test]
    fn cubic_normal_forms_match_the_hand_oracle() {
        let (_, cd) = sl2();
        // e·f·e = (f·e + t)·e = f·e² + t·e
        let efe = pbw_normalize(&cd, &[2, 0, 2], 6).unwrap();
        let mut expect = PbwElement::zero(3);
        expect.add_term(mono(3, &[(0, 1), (2, 2)]), rint(1));
        expect.add_term(mono(3, &[(1, 1), (2, 1)]), rint(1));
        assert_eq!(efe, expect, "efe = fe² + te");

        // e²·f = f·e² + 2·t·e − 2·e
        let eef = pbw_normalize(&cd, &[2, 2, 0], 6).unwrap();
        let mut expect = PbwElement::zero(3);
        expect.add_term(mono(3, &[(0, 1), (2, 2)]), rint(1));
        expect.add_term(mono(3, &[(1, 1), (2, 1)]), rint(2));
        expect.add_term(mono(3, &[(2, 1)]), rint(-2));
        assert_eq!(eef, expect, "e²f = fe² + 2te − 2e");
    }

    #[test]
    fn degree_cap_is_enforced() {
        let (_, cd) = sl2();
        let word = vec![2usize; 7];
        assert_eq!(
            pbw_normalize(&cd, &word, 6),
            Err(Error::DegreeCapExceeded { degree: 7, cap: 6 })
        );
    }

    #[test]
    fn confluence_on_random_words() {
        for (fam, rank, count, maxlen) in
            [('A', 1usize, 600usize, 6usize), ('A', 2, 500, 4), ('B', 2, 500, 4)]
        {
            let rs = build_root_system(fam, rank).unwrap();
            let cd = build_chevalley(&rs).unwrap();
            let dim = cd.dim();
            let mut rng = ChaCha20Rng::seed_from_u64(0x9e3779b97f4a7c15);
            for _ in 0..count {
                let len = rng.gen_range(0..=maxlen);
                let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..dim)).collect();
                let a = pbw_normalize_words(
                    &cd,
                    vec![(word.clone(), Rat::one())],
                    maxlen,
                    RewriteStrategy::FirstInversion,
                )
                .unwrap();
                let b = pbw_normalize_words(
                    &cd,
                    vec![(word, Rat::one())],
                    maxlen,
                    RewriteStrategy::LastInversion,
                )
                .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn multiplication_is_associative() {
        let rs = build_root_system('B', 2).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        let dim = cd.dim();
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        let random_elem = |rng: &mut ChaCha20Rng| {
            let mut x = PbwElement::zero(dim);
            for _ in 0..3 {
                let len = rng.gen_range(0..=2usize);
                let mut exp = vec![0u32; dim];
                for _ in 0..len {
                    exp[rng.gen_range(0..dim)] += 1;
                }
                x.add_term(exp, rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)));
            }
            x
        };
        for _ in 0..20 {
            let a = random_elem(&mut rng);
            let b = random_elem(&mut rng);
            let c = random_elem(&mut rng);
            let ab_c = pbw_mul(&cd, &pbw_mul(&cd, &a, &b, 8).unwrap(), &c, 8).unwrap();
            let a_bc = pbw_mul(&cd, &a, &pbw_mul(&cd, &b, &c, 8).unwrap(), 8).unwrap();
            assert_eq!(ab_c, a_bc);
        }
    }

    #[test]
    fn gamma_tilde_on_sl2() {
        let (rs, cd) = sl2();
        // γ̃(1) = 1
        let one = PbwElement::one(3);
        assert_eq!(gamma_tilde(&rs, &cd, &one), Poly::constant(1, rint(1)));
        // γ̃(t) = t − 1 in coroot units; our coordinate x has t = 2x,
        // so the image is 2x − 1.
        let t = PbwElement::letter(3, 1);
        let mut expect = Poly::linear_rat(&[rint(2)]);
        expect.add_term(crate::polyalg::Mono::one(1), rint(-1));
        assert_eq!(gamma_tilde(&rs, &cd, &t), expect);
        // γ̃(Ω) = (h² − 1)/8 with h = 2x: x²/2 − 1/8.
        let omega = casimir_element(&cd);
        let mut expect = Poly::zero(1);
        expect.add_term(crate::polyalg::Mono(vec![2]), rat(1, 2));
        expect.add_term(crate::polyalg::Mono(vec![0]), rat(-1, 8));
        assert_eq!(gamma_tilde(&rs, &cd, &omega), expect);
    }

    #[test]
    fn casimir_is_central_and_matches_the_scalar() {
        for (fam, rank) in [('A', 1usize), ('A', 2), ('B', 2)] {
            let rs = build_root_system(fam, rank).unwrap();
            let cd = build_chevalley(&rs).unwrap();
            let omega = casimir_element(&cd);
            for l in 0..cd.dim() {
                assert!(
                    ad_letter(&cd, l, &omega, 4).unwrap().is_zero(),
                    "[x_{l}, Ω] = 0"
                );
            }
            // Harish-Chandra evaluation: γ̃(Ω)(λ + ρ) = ⟨λ, λ + 2ρ⟩.
            let g = gamma_tilde(&rs, &cd, &omega);
            let rho = rs.rho();
            for lam in [
                vec![rint(0); rank],
                (0..rank).map(|i| rint(i as i64 + 1)).collect::<Vec<_>>(),
                (0..rank).map(|i| rat(2 * i as i64 + 1, 2)).collect::<Vec<_>>(),
            ] {
                let shifted: Vec<Rat> = lam.iter().zip(&rho).map(|(a, b)| a + b).collect();
                assert_eq!(g.eval(&shifted), casimir_scalar(&rs, &lam));
            }
        }
    }

    #[test]
    fn gamma_commute_examples() {
        let (rs, cd) = sl2();
        let t = PbwElement::letter(3, 1);
        let e = PbwElement::letter(3, 2);
        let omega = casimir_element(&cd);
        // (t, Ω): the shift is what makes this work
        gamma_commute_check(&rs, &cd, &t, &omega, 4).unwrap();
        // (anything, 1)
        let one = PbwElement::one(3);
        gamma_commute_check(&rs, &cd, &e, &one, 4).unwrap();
        // (e, fe): fe has weight zero
        let fe = pbw_normalize(&cd, &[0, 2], 6).unwrap();
        gamma_commute_check(&rs, &cd, &e, &fe, 4).unwrap();
        // weight precondition is enforced
        assert_eq!(
            gamma_commute_check(&rs, &cd, &t, &e, 4).unwrap_err(),
            Error::WeightNotZero
        );
    }

    #[test]
    fn gamma_commute_on_b2() {
        let rs = build_root_system('B', 2).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        let omega = casimir_element(&cd);
        let t0 = PbwElement::letter(cd.dim(), cd.n_pos);
        gamma_commute_check(&rs, &cd, &t0, &omega, 4).unwrap();
        let e0 = PbwElement::letter(cd.dim(), cd.n_pos + 2);
        gamma_commute_check(&rs, &cd, &e0, &omega, 5).unwrap();
    }
}
