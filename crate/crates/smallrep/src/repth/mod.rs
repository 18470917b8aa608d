//! Finite-dimensional irreducible representations at rank ≤ 3: weight
//! multiplicities, explicit operator matrices for all root vectors,
//! zero-weight decompositions, the Weyl-group action by Tits
//! representatives, Casimir identities, and the smallness/quasi-smallness
//! classification.
//!
//! Operators are stored blockwise per weight space (`BlockOp`), never as
//! dense module-sized matrices: every operator of interest shifts weights
//! by a fixed amount, so composition, commutators, and vector application
//! all stay within the weight decomposition.

pub mod chars;
pub mod skeleton;

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace};
use crate::rootsys::chevalley::{ChevalleyData, Letter};
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{rint, Rat};
use chars::WCharTable;
use skeleton::{build_skeleton, HwSkeleton};

/// A weight-homogeneous operator: maps V_μ → V_{μ+shift}, stored as one
/// matrix per source weight index. Missing blocks are zero; stored blocks
/// are never the zero matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockOp {
    pub shift: Vec<Rat>,
    pub blocks: BTreeMap<usize, Mat<Rat>>,
}

fn vadd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl BlockOp {
    pub fn zero(shift: Vec<Rat>) -> Self {
        BlockOp { shift, blocks: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    fn insert_nonzero(&mut self, wi: usize, m: Mat<Rat>) {
        if !m.is_zero() {
            self.blocks.insert(wi, m);
        }
    }

    pub fn block(&self, wi: usize) -> Option<&Mat<Rat>> {
        self.blocks.get(&wi)
    }

    /// self ∘ inner.
    pub fn compose(&self, sk: &HwSkeleton, inner: &BlockOp) -> BlockOp {
        let mut out = BlockOp::zero(vadd(&self.shift, &inner.shift));
        for (&wi, a) in &inner.blocks {
            let mid_w = vadd(&sk.weights[wi], &inner.shift);
            let Some(mid) = sk.index_of_weight(&mid_w) else { continue };
            if let Some(b) = self.blocks.get(&mid) {
                out.insert_nonzero(wi, b.matmul(a));
            }
        }
        out
    }

    pub fn add(&self, other: &BlockOp) -> BlockOp {
        assert_eq!(self.shift, other.shift, "adding operators of different weight");
        let mut out = BlockOp::zero(self.shift.clone());
        for (&wi, a) in &self.blocks {
            match other.blocks.get(&wi) {
                Some(b) => out.insert_nonzero(wi, a.add(b)),
                None => out.insert_nonzero(wi, a.clone()),
            }
        }
        for (&wi, b) in &other.blocks {
            if !self.blocks.contains_key(&wi) {
                out.insert_nonzero(wi, b.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> BlockOp {
        if c.is_zero() {
            return BlockOp::zero(self.shift.clone());
        }
        BlockOp {
            shift: self.shift.clone(),
            blocks: self.blocks.iter().map(|(&w, m)| (w, m.scale(c))).collect(),
        }
    }

    pub fn sub(&self, other: &BlockOp) -> BlockOp {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn commutator(sk: &HwSkeleton, a: &BlockOp, b: &BlockOp) -> BlockOp {
        a.compose(sk, b).sub(&b.compose(sk, a))
    }

    /// Apply to a vector in global coordinates.
    pub fn apply_vec(&self, sk: &HwSkeleton, v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); sk.dim];
        for (&wi, m) in &self.blocks {
            let off = sk.basis_offset[wi];
            let seg = &v[off..off + sk.mult[wi]];
            if seg.iter().all(|x| x.is_zero()) {
                continue;
            }
            let tgt_w = vadd(&sk.weights[wi], &self.shift);
            let tgt = sk
                .index_of_weight(&tgt_w)
                .expect("stored blocks target existing weights");
            let y = m.mul_vec(seg);
            let toff = sk.basis_offset[tgt];
            for (r, val) in y.into_iter().enumerate() {
                out[toff + r] += val;
            }
        }
        out
    }
}

/// An irreducible module with explicit blockwise operators for every basis
/// letter of g (`ops` is indexed like [`ChevalleyData`] letters).
#[derive(Clone, Debug)]
pub struct Irrep {
    pub lambda: Vec<Rat>,
    pub sk: HwSkeleton,
    pub ops: Vec<BlockOp>,
}

impl Irrep {
    pub fn dim(&self) -> usize {
        self.sk.dim
    }

    pub fn op(&self, letter: usize) -> &BlockOp {
        &self.ops[letter]
    }

    pub fn zero_weight_index(&self) -> Option<usize> {
        let zero = vec![Rat::zero(); self.lambda.len()];
        self.sk.index_of_weight(&zero)
    }
}

/// The Weyl dimension formula ∏ ⟨λ+ρ, α⟩ / ⟨ρ, α⟩.
pub fn weyl_dim(rs: &RootSystem, lambda: &[Rat]) -> Result<u64> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::NotDominantIntegral(format!("{lambda:?}")));
    }
    let rho = rs.rho();
    let lr = vadd(lambda, &rho);
    let mut num = Rat::one();
    let mut den = Rat::one();
    for p in rs.positive_indices() {
        num *= rs.ip_std(&lr, &rs.roots[p]);
        den *= rs.ip_std(&rho, &rs.roots[p]);
    }
    let d = num / den;
    assert!(d.is_integer(), "Weyl dimension is an integer");
    Ok(d.to_integer().to_u64().expect("dimension fits in u64"))
}

/// Expansion of v over the simple roots, if the coefficients are
/// nonnegative integers.
fn nonneg_root_combo(rs: &RootSystem, v: &[Rat]) -> bool {
    let n = rs.rank;
    let mut m = Mat::<Rat>::zeros(n, n);
    for j in 0..n {
        for r in 0..n {
            *m.at_mut(r, j) = rs.roots[j][r].clone();
        }
    }
    match m.solve(v) {
        Some(c) => c.iter().all(|x| x.is_integer() && !x.is_negative()),
        None => false,
    }
}

/// Whether μ is a weight of V(λ): its dominant representative ν must
/// satisfy λ − ν ∈ Z≥0·Δ.
pub fn is_weight_of(rs: &RootSystem, lambda: &[Rat], mu: &[Rat]) -> bool {
    let domrep = rs.dominant_representative(mu);
    let diff: Vec<Rat> = lambda.iter().zip(&domrep).map(|(a, b)| a - b).collect();
    nonneg_root_combo(rs, &diff)
}

/// Weight multiplicities of V(λ) by Freudenthal's recursion, cross-usable
/// as an oracle independent of the matrix construction.
pub fn freudenthal_weights(rs: &RootSystem, lambda: &[Rat]) -> Result<BTreeMap<Vec<Rat>, u64>> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::NotDominantIntegral(format!("{lambda:?}")));
    }
    let rho = rs.rho();
    let c_top = {
        let lr = vadd(lambda, &rho);
        rs.ip_std(&lr, &lr)
    };

    // enumerate the full weight set by lowering (saturated and connected)
    let mut all: Vec<Vec<Rat>> = vec![lambda.to_vec()];
    let mut seen: BTreeMap<Vec<Rat>, usize> = BTreeMap::from([(lambda.to_vec(), 0)]);
    let mut head = 0;
    while head < all.len() {
        let cur = all[head].clone();
        head += 1;
        for i in 0..rs.rank {
            let down: Vec<Rat> = cur.iter().zip(&rs.roots[i]).map(|(a, b)| a - b).collect();
            if !seen.contains_key(&down) && is_weight_of(rs, lambda, &down) {
                seen.insert(down.clone(), all.len());
                all.push(down);
            }
        }
    }

    // dominant weights ordered by increasing depth λ − μ
    let mut dominant: Vec<Vec<Rat>> = all
        .iter()
        .filter(|mu| rs.is_dominant_integral(mu))
        .cloned()
        .collect();
    dominant.sort_by_key(|mu| {
        let diff: Vec<Rat> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        // depth = Σ coefficients over simple roots = ⟨diff, ρ∨⟩·const; use
        // pairing sum, integral for lattice differences
        (0..rs.rank).map(|i| rs.pairing(&diff, i)).sum::<Rat>().to_integer()
    });

    let mut dmult: BTreeMap<Vec<Rat>, Rat> = BTreeMap::new();
    let lookup = |dm: &BTreeMap<Vec<Rat>, Rat>, mu: &[Rat]| -> Option<Rat> {
        if !is_weight_of(rs, lambda, mu) {
            return None;
        }
        Some(dm[&rs.dominant_representative(mu)].clone())
    };
    for mu in &dominant {
        if mu == lambda {
            dmult.insert(mu.clone(), Rat::one());
            continue;
        }
        let mut rhs = Rat::zero();
        for p in rs.positive_indices() {
            let mut k = 1i64;
            loop {
                let up: Vec<Rat> = mu
                    .iter()
                    .zip(&rs.roots[p])
                    .map(|(a, b)| a + b * rint(k))
                    .collect();
                match lookup(&dmult, &up) {
                    Some(m) => rhs += m * rs.ip_std(&up, &rs.roots[p]),
                    None => break,
                }
                k += 1;
            }
        }
        let mr = vadd(mu, &rho);
        let denom = &c_top - rs.ip_std(&mr, &mr);
        assert!(!denom.is_zero());
        dmult.insert(mu.clone(), rint(2) * rhs / denom);
    }

    let mut out = BTreeMap::new();
    let mut total = 0u64;
    for mu in all {
        let m = dmult[&rs.dominant_representative(&mu)].clone();
        assert!(m.is_integer() && m.is_positive(), "Freudenthal multiplicity");
        let mv = m.to_integer().to_u64().unwrap();
        total += mv;
        out.insert(mu, mv);
    }
    assert_eq!(total, weyl_dim(rs, lambda)?, "Σ mult = Weyl dimension");
    Ok(out)
}

/// Smallness: no doubled root occurs in the weight support. Needs only the
/// membership test, not matrices.
pub fn is_small(rs: &RootSystem, lambda: &[Rat]) -> Result<bool> {
    if !rs.is_dominant_integral(lambda) {
        return Err(Error::NotDominantIntegral(format!("{lambda:?}")));
    }
    for p in rs.positive_indices() {
        let twice: Vec<Rat> = rs.roots[p].iter().map(|x| x * rint(2)).collect();
        if is_weight_of(rs, lambda, &twice) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn construct_irrep(
    rs: &RootSystem,
    cd: &ChevalleyData,
    lambda: &[Rat],
    dim_cap: usize,
) -> Result<Irrep> {
    let sk = build_skeleton(rs, lambda, dim_cap)?;
    let n = cd.n_pos;
    let ell = cd.rank;

    let mut ops: Vec<Option<BlockOp>> = vec![None; cd.dim()];
    for i in 0..ell {
        ops[i] = Some(BlockOp {
            shift: rs.roots[i].iter().map(|x| -x).collect(),
            blocks: sk.f_blocks[i].clone(),
        });
        ops[n + ell + i] = Some(BlockOp {
            shift: rs.roots[i].clone(),
            blocks: sk.e_blocks[i].clone(),
        });
        // t_i: diagonal per weight
        let mut diag = BlockOp::zero(vec![Rat::zero(); rs.rank]);
        for (wi, w) in sk.weights.iter().enumerate() {
            let c = rs.pairing(w, i);
            if !c.is_zero() {
                diag.insert_nonzero(wi, Mat::identity(sk.mult[wi]).scale(&c));
            }
        }
        ops[n + i] = Some(diag);
    }

    let mut by_height: Vec<usize> = (0..n).collect();
    by_height.sort_by_key(|&p| (rs.height(p), p));
    for &p in &by_height {
        if p < ell {
            continue;
        }
        let (i, q) = cd.special_pair[p].expect("non-simple roots carry a designated pair");
        let ne = cd.n_constant(i, q).unwrap().clone();
        let nf = cd
            .n_constant(rs.neg_index(i), rs.neg_index(q))
            .unwrap()
            .clone();
        let e_p = BlockOp::commutator(
            &sk,
            ops[n + ell + i].as_ref().unwrap(),
            ops[n + ell + q].as_ref().unwrap(),
        )
        .scale(&(Rat::one() / ne));
        let f_p = BlockOp::commutator(&sk, ops[i].as_ref().unwrap(), ops[q].as_ref().unwrap())
            .scale(&(Rat::one() / nf));
        ops[n + ell + p] = Some(e_p);
        ops[p] = Some(f_p);
    }

    let v = Irrep {
        lambda: lambda.to_vec(),
        sk,
        ops: ops.into_iter().map(|o| o.unwrap()).collect(),
    };

    // independent oracles: Freudenthal multiplicities and the Weyl dimension
    let fr = freudenthal_weights(rs, lambda)?;
    assert_eq!(fr.len(), v.sk.weights.len(), "weight support");
    for (wi, w) in v.sk.weights.iter().enumerate() {
        assert_eq!(fr[w], v.sk.mult[wi] as u64, "multiplicity at {w:?}");
    }
    assert_eq!(v.dim() as u64, weyl_dim(rs, lambda)?);

    verify_bracket_relations(cd, &v, rs.rank <= 2)?;
    Ok(v)
}

/// Check [ρ(x), ρ(y)] = ρ([x, y]) over letter pairs — all of them when
/// `exhaustive`, otherwise all pairs involving a simple or Cartan letter
/// plus every opposite pair (e_γ, f_γ).
pub fn verify_bracket_relations(cd: &ChevalleyData, v: &Irrep, exhaustive: bool) -> Result<()> {
    let ell = cd.rank;
    let dimg = cd.dim();
    let simple_letter = |l: usize| match cd.letter(l) {
        Letter::F(p) | Letter::E(p) => p < ell,
        Letter::T(_) => true,
    };
    for a in 0..dimg {
        for b in (a + 1)..dimg {
            let opposite = matches!(
                (cd.letter(a), cd.letter(b)),
                (Letter::F(p), Letter::E(q)) | (Letter::E(p), Letter::F(q)) if p == q
            );
            if !(exhaustive || simple_letter(a) || simple_letter(b) || opposite) {
                continue;
            }
            let lhs = BlockOp::commutator(&v.sk, &v.ops[a], &v.ops[b]);
            let mut rhs = BlockOp::zero(lhs.shift.clone());
            for (l, c) in cd.bracket(a, b) {
                rhs = rhs.add(&v.ops[l].scale(&c));
            }
            if lhs != rhs {
                return Err(Error::Invalid(format!(
                    "bracket relation fails at letters ({a}, {b}) on λ = {:?}",
                    v.lambda
                )));
            }
        }
    }
    Ok(())
}

/// exp(c·op) v for a nilpotent weight-shifting operator.
fn exp_apply(sk: &HwSkeleton, op: &BlockOp, c: &Rat, v: &[Rat]) -> Vec<Rat> {
    let mut acc = v.to_vec();
    let mut term = v.to_vec();
    let mut k = 1i64;
    loop {
        term = op.apply_vec(sk, &term);
        if term.iter().all(|x| x.is_zero()) {
            break;
        }
        let s = c / rint(k);
        for t in term.iter_mut() {
            *t *= &s;
        }
        // c^k/k!: multiply the running term by c/k each round
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t;
        }
        k += 1;
    }
    acc
}

#[derive(Clone, Debug)]
pub struct ZeroWeightDecomposition {
    pub vh_dim: usize,
    /// Coordinates below are in the zero-weight basis of the module.
    pub single: Subspace<Rat>,
    pub double: Subspace<Rat>,
    /// Tits W-action on V^h, one matrix per Weyl group element.
    pub w_mats: Vec<Mat<Rat>>,
    /// W-character of V^h_single.
    pub single_char: Vec<(String, u64)>,
}

/// Matrix of `m` restricted to an invariant subspace, in the subspace's
/// canonical basis.
fn restrict_matrix(space: &Subspace<Rat>, m: &Mat<Rat>) -> Mat<Rat> {
    let d = space.dim();
    let n = if d > 0 { space.basis()[0].len() } else { 0 };
    let mut bt = Mat::<Rat>::zeros(n, d);
    for (j, b) in space.basis().iter().enumerate() {
        for (r, x) in b.iter().enumerate() {
            *bt.at_mut(r, j) = x.clone();
        }
    }
    let mut out = Mat::<Rat>::zeros(d, d);
    for j in 0..d {
        let y = m.mul_vec(space.basis()[j].as_slice());
        let c = bt.solve(&y).expect("subspace is invariant");
        for (r, x) in c.into_iter().enumerate() {
            *out.at_mut(r, j) = x;
        }
    }
    out
}

/// Decompose the W-module carried by `space` (coordinates matching the
/// `w_mats`) into catalog characters.
pub fn w_character_of(
    w: &WeylGroup,
    table: &WCharTable,
    space: &Subspace<Rat>,
    w_mats: &[Mat<Rat>],
) -> Result<Vec<(String, u64)>> {
    let _ = w;
    let traces: Vec<Rat> = table
        .class_rep
        .iter()
        .map(|&e| {
            let r = restrict_matrix(space, &w_mats[e]);
            (0..r.rows).fold(Rat::zero(), |acc, i| acc + r.at(i, i))
        })
        .collect();
    table.decompose(&traces)
}

pub fn zero_weight_decomposition(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    table: &WCharTable,
    v: &Irrep,
) -> Result<ZeroWeightDecomposition> {
    let n = cd.n_pos;
    let ell = cd.rank;
    let Some(zwi) = v.zero_weight_index() else {
        return Ok(ZeroWeightDecomposition {
            vh_dim: 0,
            single: Subspace::zero(0),
            double: Subspace::zero(0),
            w_mats: vec![Mat::zeros(0, 0); w.elements.len()],
            single_char: Vec::new(),
        });
    };
    let m0 = v.sk.mult[zwi];

    // squared operators for every positive root, e and f sides
    let squares: Vec<(BlockOp, BlockOp)> = (0..n)
        .map(|p| {
            let e = &v.ops[n + ell + p];
            let f = &v.ops[p];
            (e.compose(&v.sk, e), f.compose(&v.sk, f))
        })
        .collect();

    // V^h_single: joint kernel of the squares leaving V_0
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (e2, f2) in &squares {
        for op in [e2, f2] {
            if let Some(b) = op.block(zwi) {
                rows.extend(b.row_vecs());
            }
        }
    }
    let single = if rows.is_empty() {
        Subspace::from_spanning(m0, Mat::<Rat>::identity(m0).row_vecs())
    } else {
        let stacked = Mat::from_rows(rows);
        Subspace::from_spanning(m0, stacked.kernel())
    };

    // V^h_double: V_0 ∩ Σ im(σ(x_γ)²)
    let mut dspan: Vec<Vec<Rat>> = Vec::new();
    for (e2, f2) in &squares {
        for op in [e2, f2] {
            let src_w: Vec<Rat> = v.sk.weights[zwi]
                .iter()
                .zip(&op.shift)
                .map(|(a, b)| a - b)
                .collect();
            if let Some(swi) = v.sk.index_of_weight(&src_w) {
                if let Some(b) = op.block(swi) {
                    for j in 0..b.cols {
                        dspan.push(b.col(j));
                    }
                }
            }
        }
    }
    let double = Subspace::from_spanning(m0, dspan);

    assert_eq!(single.dim() + double.dim(), m0, "V^h = single ⊕ double (dimensions)");
    assert_eq!(single.intersect(&double).dim(), 0, "single ∩ double = 0");

    // Tits representatives on V^h
    let mut smats: Vec<Mat<Rat>> = Vec::new();
    for i in 0..ell {
        let e = &v.ops[n + ell + i];
        let f = &v.ops[i];
        let mut cols = Mat::<Rat>::zeros(m0, m0);
        for j in 0..m0 {
            let mut vec0 = vec![Rat::zero(); v.sk.dim];
            vec0[v.sk.global_index(zwi, j)] = Rat::one();
            let a = exp_apply(&v.sk, e, &Rat::one(), &vec0);
            let b = exp_apply(&v.sk, f, &-Rat::one(), &a);
            let c = exp_apply(&v.sk, e, &Rat::one(), &b);
            let off = v.sk.basis_offset[zwi];
            for (g, x) in c.iter().enumerate() {
                if (off..off + m0).contains(&g) {
                    *cols.at_mut(g - off, j) = x.clone();
                } else {
                    assert!(x.is_zero(), "s̃_i preserves the zero weight space");
                }
            }
        }
        smats.push(cols);
    }

    // involution and braid relations — Matsumoto then gives well-defined
    // products along reduced words
    let id = Mat::<Rat>::identity(m0);
    for (i, s) in smats.iter().enumerate() {
        assert_eq!(s.matmul(s), id, "s̃_{i}² = 1 on V^h");
    }
    for i in 0..ell {
        for j in (i + 1)..ell {
            let m_ord = match rs.cartan[i][j] * rs.cartan[j][i] {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                other => panic!("unexpected Cartan product {other}"),
            };
            let mut a = id.clone();
            let mut b = id.clone();
            for k in 0..m_ord {
                let (x, y) = if k % 2 == 0 { (i, j) } else { (j, i) };
                a = a.matmul(&smats[x]);
                b = b.matmul(&smats[y]);
            }
            assert_eq!(a, b, "braid relation ({i},{j})");
        }
    }

    let w_mats: Vec<Mat<Rat>> = w
        .elements
        .iter()
        .map(|e| {
            e.word
                .iter()
                .fold(id.clone(), |acc, &l| acc.matmul(&smats[l]))
        })
        .collect();

    let single_char = w_character_of(w, table, &single, &w_mats)?;

    Ok(ZeroWeightDecomposition {
        vh_dim: m0,
        single,
        double,
        w_mats,
        single_char,
    })
}

/// ⟨λ, λ + 2ρ⟩ in the Killing normalization: the scalar of the Casimir.
pub fn casimir_scalar(rs: &RootSystem, lambda: &[Rat]) -> Rat {
    let two_rho: Vec<Rat> = rs.rho().iter().map(|x| x * rint(2)).collect();
    rs.ip_killing(lambda, &vadd(lambda, &two_rho))
}

/// Scalar of Ω_W = Σ_{α>0} ⟨α,α⟩(1 − s_α) on the irreducible character χ.
pub fn omega_w_scalar(rs: &RootSystem, w: &WeylGroup, table: &WCharTable, chi: usize) -> Rat {
    let deg = table.degree(chi).clone();
    let mut acc = Rat::zero();
    for p in rs.positive_indices() {
        let cls = w.class_of[w.reflection_elt[p] as usize];
        let val = &table.values[chi][cls];
        acc += rs.ip_killing(&rs.roots[p], &rs.roots[p]) * (Rat::one() - val / &deg);
    }
    acc
}

#[derive(Clone, Debug)]
pub struct CasimirReport {
    pub lambda: Vec<Rat>,
    pub scalar: Rat,
    pub omega_g_is_scalar: bool,
    pub omega_w_matches_on_single: bool,
    pub vh_dim: usize,
    pub single_dim: usize,
}

/// Ω_W as a matrix on V^h, from the Tits action.
pub fn omega_w_matrix(rs: &RootSystem, w: &WeylGroup, zdec: &ZeroWeightDecomposition) -> Mat<Rat> {
    let m0 = zdec.vh_dim;
    let mut acc = Mat::<Rat>::zeros(m0, m0);
    let id = Mat::<Rat>::identity(m0);
    for p in rs.positive_indices() {
        let len2 = rs.ip_killing(&rs.roots[p], &rs.roots[p]);
        let s = &zdec.w_mats[w.reflection_elt[p] as usize];
        acc = acc.add(&id.sub(s).scale(&len2));
    }
    acc
}

pub fn verify_casimir_identity(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    table: &WCharTable,
    v: &Irrep,
) -> Result<CasimirReport> {
    let n = cd.n_pos;
    let ell = cd.rank;
    let scalar = casimir_scalar(rs, &v.lambda);
    let kinv = cd
        .killing_cartan
        .inverse()
        .expect("Killing form is nondegenerate on h");

    // Ω_g blockwise: Cartan part + Σ_γ (e f + f e)/B(e_γ, f_γ)
    let mut omega_ok = true;
    'outer: for (wi, mu) in v.sk.weights.iter().enumerate() {
        let m = v.sk.mult[wi];
        let mut cart = Rat::zero();
        for i in 0..ell {
            for j in 0..ell {
                cart += kinv.at(i, j) * rs.pairing(mu, i) * rs.pairing(mu, j);
            }
        }
        let mut block = Mat::<Rat>::identity(m).scale(&cart);
        for p in 0..n {
            let bef = Rat::one() / &cd.killing_ef[p];
            let e = &v.ops[n + ell + p];
            let f = &v.ops[p];
            for (first, second) in [(e, f), (f, e)] {
                // second then first, starting at weight wi
                if let Some(b1) = second.block(wi) {
                    let mid = vadd(mu, &second.shift);
                    let mwi = v.sk.index_of_weight(&mid).unwrap();
                    if let Some(b2) = first.block(mwi) {
                        block = block.add(&b2.matmul(b1).scale(&bef));
                    }
                }
            }
        }
        if block != Mat::<Rat>::identity(m).scale(&scalar) {
            omega_ok = false;
            break 'outer;
        }
    }

    let zdec = zero_weight_decomposition(rs, cd, w, table, v)?;
    let mut omega_w_ok = true;
    if zdec.vh_dim > 0 {
        let om = omega_w_matrix(rs, w, &zdec);
        for b in zdec.single.basis() {
            let lhs = om.mul_vec(b.as_slice());
            let rhs: Vec<Rat> = b.iter().map(|x| x * &scalar).collect();
            if lhs != rhs {
                omega_w_ok = false;
                break;
            }
        }
    }

    Ok(CasimirReport {
        lambda: v.lambda.clone(),
        scalar,
        omega_g_is_scalar: omega_ok,
        omega_w_matches_on_single: omega_w_ok,
        vh_dim: zdec.vh_dim,
        single_dim: zdec.single.dim(),
    })
}

/// Multiplicity of V(λ) in V(ρ) ⊗ V(ρ)*, computed two ways: the kernel of
/// the simple-root squares inside V^h, and character-theoretically by
/// peeling the tensor-product weight system. The two are asserted equal.
pub fn quasi_small_multiplicity(
    rs: &RootSystem,
    cd: &ChevalleyData,
    lambda: &[Rat],
    dim_cap: usize,
) -> Result<u64> {
    let rho = rs.rho();
    for mu in [lambda, rho.as_slice()] {
        let d = weyl_dim(rs, mu)?;
        if d > dim_cap as u64 {
            return Err(Error::DimensionCapExceeded { dim: d, cap: dim_cap as u64 });
        }
    }

    // route (a): matrices
    let v = construct_irrep(rs, cd, lambda, dim_cap)?;
    let n = cd.n_pos;
    let ell = cd.rank;
    let kernel_dim = match v.zero_weight_index() {
        None => 0,
        Some(zwi) => {
            let m0 = v.sk.mult[zwi];
            let mut rows: Vec<Vec<Rat>> = Vec::new();
            let mut sigma_rows: Vec<Vec<Rat>> = Vec::new();
            for p in 0..n {
                let e = &v.ops[n + ell + p];
                let e2 = e.compose(&v.sk, e);
                if let Some(b) = e2.block(zwi) {
                    if p < ell {
                        rows.extend(b.row_vecs());
                    }
                    sigma_rows.extend(b.row_vecs());
                }
                let f = &v.ops[p];
                let f2 = f.compose(&v.sk, f);
                if let Some(b) = f2.block(zwi) {
                    sigma_rows.extend(b.row_vecs());
                }
            }
            let ker = |rws: Vec<Vec<Rat>>| -> Subspace<Rat> {
                if rws.is_empty() {
                    Subspace::from_spanning(m0, Mat::<Rat>::identity(m0).row_vecs())
                } else {
                    Subspace::from_spanning(m0, Mat::from_rows(rws).kernel())
                }
            };
            let pi_kernel = ker(rows);
            let sigma_kernel = ker(sigma_rows);
            assert!(
                pi_kernel.contains_subspace(&sigma_kernel),
                "the full-root kernel lies in the simple-root kernel"
            );
            pi_kernel.dim()
        }
    };

    // route (b): weight-system peeling of V(ρ) ⊗ V(ρ)*
    let wr = freudenthal_weights(rs, &rho)?;
    let mut conv: BTreeMap<Vec<Rat>, i128> = BTreeMap::new();
    for (mu, a) in &wr {
        for (nu, b) in &wr {
            let key: Vec<Rat> = mu.iter().zip(nu).map(|(x, y)| x - y).collect();
            *conv.entry(key).or_insert(0) += (*a as i128) * (*b as i128);
        }
    }
    let mut tensor_mult = 0u64;
    let rho_ip = |mu: &[Rat]| rs.ip_std(mu, &rho);
    loop {
        // highest remaining dominant weight
        let top = conv
            .iter()
            .filter(|(mu, c)| **c != 0 && rs.is_dominant_integral(mu))
            .max_by(|(a, _), (b, _)| rho_ip(a).cmp(&rho_ip(b)).then_with(|| a.cmp(b)))
            .map(|(mu, c)| (mu.clone(), *c));
        let Some((mu, c)) = top else { break };
        assert!(c > 0, "peeling produced a negative multiplicity");
        if mu == lambda {
            tensor_mult = c as u64;
        }
        for (nu, m) in freudenthal_weights(rs, &mu)? {
            *conv.entry(nu).or_insert(0) -= c * m as i128;
        }
    }

    assert_eq!(
        kernel_dim as u64, tensor_mult,
        "matrix kernel and character multiplicity agree"
    );
    Ok(tensor_mult)
}

#[derive(Clone, Debug)]
pub struct ClassifyRow {
    pub lambda: Vec<Rat>,
    pub dim: u64,
    pub small: bool,
    pub quasi_small: bool,
    pub dim_vh: usize,
    pub dim_single: usize,
    pub dim_double: usize,
    pub w_constituents: Vec<(String, u64)>,
    pub casimir: Rat,
}

/// All dominant integral λ in the root lattice with dim V(λ) ≤ cap,
/// ordered by (dimension, coordinates).
pub fn root_lattice_weights_below(rs: &RootSystem, dim_cap: usize) -> Result<Vec<Vec<Rat>>> {
    let fw = rs.fundamental_weights();
    let ell = rs.rank;
    let weight_of = |marks: &[u32]| -> Vec<Rat> {
        let mut l = vec![Rat::zero(); ell];
        for (i, &m) in marks.iter().enumerate() {
            for (r, c) in fw[i].iter().enumerate() {
                l[r] += c * rint(m as i64);
            }
        }
        l
    };
    // the dimension grows in every mark, so each axis can stop at the first
    // overflow given the marks fixed so far
    fn rec(
        rs: &RootSystem,
        weight_of: &dyn Fn(&[u32]) -> Vec<Rat>,
        marks: &mut Vec<u32>,
        axis: usize,
        dim_cap: u64,
        out: &mut Vec<(u64, Vec<Rat>)>,
    ) -> Result<()> {
        if axis == marks.len() {
            let lambda = weight_of(marks);
            let d = weyl_dim(rs, &lambda)?;
            if d <= dim_cap && rs.in_root_lattice(&lambda) {
                out.push((d, lambda));
            }
            return Ok(());
        }
        let mut m = 0u32;
        loop {
            marks[axis] = m;
            let partial = weight_of(&marks[..axis + 1]);
            if weyl_dim(rs, &partial)? > dim_cap {
                break;
            }
            rec(rs, weight_of, marks, axis + 1, dim_cap, out)?;
            m += 1;
        }
        marks[axis] = 0;
        Ok(())
    }
    let mut out: Vec<(u64, Vec<Rat>)> = Vec::new();
    let mut marks = vec![0u32; ell];
    rec(rs, &weight_of, &mut marks, 0, dim_cap as u64, &mut out)?;
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    Ok(out.into_iter().map(|(_, l)| l).collect())
}

pub fn classify_sweep(
    rs: &RootSystem,
    cd: &ChevalleyData,
    w: &WeylGroup,
    table: &WCharTable,
    dim_cap: usize,
) -> Result<Vec<ClassifyRow>> {
    let mut rows = Vec::new();
    for lambda in root_lattice_weights_below(rs, dim_cap)? {
        let v = construct_irrep(rs, cd, &lambda, dim_cap)?;
        let zdec = zero_weight_decomposition(rs, cd, w, table, &v)?;
        let small = is_small(rs, &lambda)?;
        // Prop. comp_subs consequence: small ⟺ no double part
        assert_eq!(small, zdec.double.dim() == 0, "smallness ⟺ V^h_double = 0");
        rows.push(ClassifyRow {
            lambda: lambda.clone(),
            dim: v.dim() as u64,
            small,
            quasi_small: zdec.single.dim() > 0,
            dim_vh: zdec.vh_dim,
            dim_single: zdec.single.dim(),
            dim_double: zdec.double.dim(),
            w_constituents: zdec.single_char.clone(),
            casimir: casimir_scalar(rs, &lambda),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::chevalley::build_chevalley;
    use crate::rootsys::build_root_system;
    use crate::scalar::rat;

    fn context(f: char, r: usize) -> (RootSystem, ChevalleyData, WeylGroup, WCharTable) {
        let rs = build_root_system(f, r).unwrap();
        let cd = build_chevalley(&rs).unwrap();
        let w = WeylGroup::new(&rs);
        let table = chars::character_table(&rs, &w).unwrap();
        (rs, cd, w, table)
    }

    #[test]
    fn freudenthal_matches_known_values() {
        let rs = build_root_system('A', 2).unwrap();
        let theta = rs.highest_root();
        let fr = freudenthal_weights(&rs, &rs.roots[theta].clone()).unwrap();
        let zero = vec![rint(0), rint(0)];
        assert_eq!(fr[&zero], 2);
        assert_eq!(fr.values().sum::<u64>(), 8);

        let rs = build_root_system('B', 2).unwrap();
        assert_eq!(weyl_dim(&rs, &[rint(2), rint(1)]).unwrap(), 35);
        let rs = build_root_system('A', 1).unwrap();
        let fr = freudenthal_weights(&rs, &[rat(1, 2)]).unwrap();
        assert_eq!(fr.len(), 2);
        assert!(fr.values().all(|&m| m == 1));
    }

    #[test]
    fn smallness_on_b2_matches_the_worked_example() {
        let rs = build_root_system('B', 2).unwrap();
        assert!(is_small(&rs, &[rint(1), rint(1)]).unwrap());
        assert!(is_small(&rs, &[rint(1), rint(0)]).unwrap());
        assert!(is_small(&rs, &[rint(0), rint(0)]).unwrap());
        // has the weight 2e_1
        assert!(!is_small(&rs, &[rint(2), rint(1)]).unwrap());
        // adjoints are always small
        for (f, r) in [('A', 2), ('B', 2), ('G', 2), ('B', 3)] {
            let rs = build_root_system(f, r).unwrap();
            let th = rs.highest_root();
            assert!(is_small(&rs, &rs.roots[th].clone()).unwrap(), "{f}{r}");
        }
    }

    #[test]
    fn sl2_adjoint_irrep_is_exact() {
        let (rs, cd, _, _) = context('A', 1);
        let v = construct_irrep(&rs, &cd, &[rint(1)], 40).unwrap();
        assert_eq!(v.dim(), 3);
        // e op strictly raises: block structure has no diagonal part
        let e = &v.ops[cd.letter_index(Letter::E(0))];
        assert!(e.block(v.zero_weight_index().unwrap()).is_some());
    }

    #[test]
    fn adjoint_zero_weight_space_is_the_reflection_representation() {
        for (f, r) in [('A', 2), ('B', 2), ('G', 2)] {
            let (rs, cd, w, table) = context(f, r);
            let th = rs.highest_root();
            let v = construct_irrep(&rs, &cd, &rs.roots[th].clone(), 40).unwrap();
            let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
            assert_eq!(zdec.vh_dim, r);
            assert_eq!(zdec.double.dim(), 0, "adjoint is small");
            assert_eq!(zdec.single_char, vec![("refl".to_string(), 1)], "{f}{r}");
        }
    }

    #[test]
    fn five_dimensional_sl2_module_has_no_single_part() {
        let (rs, cd, w, table) = context('A', 1);
        let v = construct_irrep(&rs, &cd, &[rint(2)], 40).unwrap();
        assert_eq!(v.dim(), 5);
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        assert_eq!(zdec.vh_dim, 1);
        assert_eq!(zdec.single.dim(), 0);
        assert_eq!(zdec.double.dim(), 1);
    }

    #[test]
    fn b2_casimir_table_values() {
        let rs = build_root_system('B', 2).unwrap();
        assert_eq!(casimir_scalar(&rs, &[rint(0), rint(0)]), rint(0));
        assert_eq!(casimir_scalar(&rs, &[rint(1), rint(0)]), rat(2, 3));
        assert_eq!(casimir_scalar(&rs, &[rint(1), rint(1)]), rint(1));
        assert_eq!(casimir_scalar(&rs, &[rint(2), rint(1)]), rint(2));
    }

    #[test]
    fn b2_omega_w_table_values() {
        let (rs, _, w, table) = context('B', 2);
        let val = |name: &str| omega_w_scalar(&rs, &w, &table, table.char_index(name).unwrap());
        assert_eq!(val("triv"), rint(0));
        assert_eq!(val("refl"), rint(1));
        assert_eq!(val("sgn"), rint(2));
        assert_eq!(val("eps_s"), rat(2, 3));
        assert_eq!(val("eps_l"), rat(4, 3));
    }

    #[test]
    fn casimir_identity_on_b2_adjoint() {
        let (rs, cd, w, table) = context('B', 2);
        let th = rs.highest_root();
        let v = construct_irrep(&rs, &cd, &rs.roots[th].clone(), 40).unwrap();
        let rep = verify_casimir_identity(&rs, &cd, &w, &table, &v).unwrap();
        assert!(rep.omega_g_is_scalar);
        assert!(rep.omega_w_matches_on_single);
        assert_eq!(rep.scalar, rint(1));
    }

    #[test]
    fn sigma21_contains_sgn_and_not_eps_l() {
        let (rs, cd, w, table) = context('B', 2);
        let v = construct_irrep(&rs, &cd, &[rint(2), rint(1)], 40).unwrap();
        assert_eq!(v.dim(), 35);
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        assert!(zdec.single.dim() > 0, "σ_(2,1) is quasi-small");
        let names: Vec<&str> = zdec.single_char.iter().map(|(n, _)| n.as_str()).collect();
        assert!(names.contains(&"sgn"));
        assert!(!names.contains(&"eps_l"));
    }

    #[test]
    fn quasi_small_multiplicities_b2() {
        let (rs, cd, _, _) = context('B', 2);
        // trivial appears once in End V_ρ
        assert_eq!(quasi_small_multiplicity(&rs, &cd, &[rint(0), rint(0)], 400).unwrap(), 1);
        // adjoint and σ_(2,1): two routes agree inside, positivity checked
        let adj = quasi_small_multiplicity(&rs, &cd, &[rint(1), rint(1)], 400).unwrap();
        assert!(adj > 0);
        let qs = quasi_small_multiplicity(&rs, &cd, &[rint(2), rint(1)], 400).unwrap();
        assert!(qs > 0);
    }

    #[test]
    fn b2_classification_to_dim_40() {
        let (rs, cd, w, table) = context('B', 2);
        let rows = classify_sweep(&rs, &cd, &w, &table, 40).unwrap();
        let quasi: Vec<Vec<Rat>> = rows
            .iter()
            .filter(|r| r.quasi_small)
            .map(|r| r.lambda.clone())
            .collect();
        assert_eq!(
            quasi,
            vec![
                vec![rint(0), rint(0)],
                vec![rint(1), rint(0)],
                vec![rint(1), rint(1)],
                vec![rint(2), rint(1)],
            ]
        );
        for r in &rows {
            let small_expected = r.lambda != vec![rint(2), rint(1)];
            if quasi.contains(&r.lambda) {
                assert_eq!(r.small, small_expected);
            }
        }
    }

    #[test]
    fn rank_three_adjoint_constructs_with_sampled_check() {
        let (rs, cd, w, table) = context('B', 3);
        let th = rs.highest_root();
        let v = construct_irrep(&rs, &cd, &rs.roots[th].clone(), 40).unwrap();
        assert_eq!(v.dim(), 21);
        let zdec = zero_weight_decomposition(&rs, &cd, &w, &table, &v).unwrap();
        assert_eq!(zdec.single_char, vec![("refl".to_string(), 1)]);
    }
}
