//! The named verification suites behind `verify`. Each suite returns a
//! config echo (merged into the report) and a flat list of entries;
//! negative tests carry `expect: fail` and count as ok exactly when the
//! checked property does break.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde_json::json;

use crate::dunkl::{dunkl_commutator_check, dunkl_equivariance_check};
use crate::envelop::coldet::column_det_pair_check;
use crate::envelop::hom::{
    classical_hc_check, gamma_injectivity_check, hecke_equivariance_test, hom_copies,
    max_degree_for, vh_image_in_complement,
};
use crate::envelop::symg::sym_hom_copies;
use crate::error::{Error, Result};
use crate::hecke::alambda::{build_a_lambda, submodule_lattice};
use crate::hecke::{eigenspace_check, sh_fixed_space, HeckeAlgebra};
use crate::linalg::Subspace;
use crate::polyalg::invariant_basis;
use crate::report::{cell_rat, cell_rat_vec, pbw_json, poly_string, SuiteEntry};
use crate::repth::chars::character_table;
use crate::repth::{
    construct_irrep, is_small, root_lattice_weights_below, verify_casimir_identity,
    zero_weight_decomposition, Irrep,
};
use crate::rootsys::chevalley::build_chevalley;
use crate::rootsys::mult::MultiplicityFunction;
use crate::rootsys::weyl::WeylGroup;
use crate::rootsys::RootSystem;
use crate::scalar::{rat, rint, KRat, Rat};

use super::{orbit_values, KSpec, RunConfig};

type SuiteOutput = (BTreeMap<String, String>, Vec<SuiteEntry>);

fn echo(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn random_rat(rng: &mut ChaCha20Rng, num_bound: i64, den_bound: i64) -> Rat {
    rat(
        rng.gen_range(-num_bound..=num_bound),
        rng.gen_range(1..=den_bound),
    )
}

fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rint(0); n];
    v[i] = rint(1);
    v
}

/// T(ξ)T(η) = T(η)T(ξ) on all monomials of bounded degree, plus the Weyl
/// equivariance of each operator, for three seeded multiplicity functions
/// (or the one passed via --k).
pub fn dunkl(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let w = WeylGroup::new(rs);
    let n_orbits = w.root_orbits.len();
    let d = cfg.max_degree.unwrap_or(5);

    let mut kfuns: Vec<(String, MultiplicityFunction)> = Vec::new();
    match &cfg.k {
        Some(KSpec::Generic) => {
            return Err(Error::Invalid(
                "the dunkl suite needs numeric multiplicities, not `generic`".into(),
            ))
        }
        Some(KSpec::List(v)) => {
            let vals = orbit_values(v, n_orbits)?;
            kfuns.push((
                format!("k={}", cell_rat_vec(&vals)),
                MultiplicityFunction::from_orbit_values(&w, &vals)?,
            ));
        }
        Some(KSpec::Geometric(v)) => {
            let m = if v.is_empty() {
                MultiplicityFunction::geometric_complex(&w)
            } else {
                MultiplicityFunction::from_orbit_values(&w, &orbit_values(v, n_orbits)?)?
            };
            kfuns.push(("k=geometric".into(), m));
        }
        None => {
            let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
            for _ in 0..3 {
                let vals: Vec<Rat> = (0..n_orbits).map(|_| random_rat(&mut rng, 6, 4)).collect();
                kfuns.push((
                    format!("k={}", cell_rat_vec(&vals)),
                    MultiplicityFunction::from_orbit_values(&w, &vals)?,
                ));
            }
        }
    }

    let mut entries = Vec::new();
    for (name, kf) in &kfuns {
        for i in 0..rs.rank {
            for j in (i + 1)..rs.rank {
                let xi = unit_vec(rs.rank, i);
                let eta = unit_vec(rs.rank, j);
                let rep = dunkl_commutator_check(rs, &w, kf, &xi, &eta, d)?;
                let mut e = SuiteEntry::positive(
                    format!("commutator {name} xi=x{i} eta=x{j} d={d}"),
                    rep.ok,
                );
                if let Some((mono, diff)) = &rep.first_failure {
                    e = e.with_witness(json!({
                        "monomial_exponents": mono,
                        "difference": poly_string(diff),
                    }));
                }
                entries.push(e);
            }
        }
        for i in 0..rs.rank {
            let ok = dunkl_equivariance_check(rs, &w, kf, &unit_vec(rs.rank, i), d)?;
            entries.push(SuiteEntry::positive(
                format!("equivariance {name} xi=x{i} d={d}"),
                ok,
            ));
        }
    }

    let names: Vec<String> = kfuns.iter().map(|(n, _)| n.clone()).collect();
    Ok((
        echo(&[("k", names.join(";")), ("max_degree", d.to_string())]),
        entries,
    ))
}

/// The parameter battery used by both Hecke suites when --k is absent:
/// k = 0, 1, −1, the geometric complex case, and the formal symbol.
fn hecke_battery(cfg: &RunConfig) -> Vec<KSpec> {
    match &cfg.k {
        Some(spec) => vec![spec.clone()],
        None => vec![
            KSpec::List(vec![rint(0)]),
            KSpec::List(vec![rint(1)]),
            KSpec::List(vec![rint(-1)]),
            KSpec::Geometric(Vec::new()),
            KSpec::Generic,
        ],
    }
}

enum ResolvedK<'a> {
    Numeric(String, HeckeAlgebra<'a, Rat>),
    Formal(String, HeckeAlgebra<'a, KRat>),
}

fn resolve_k<'a>(
    spec: &KSpec,
    rs: &'a RootSystem,
    w: &'a WeylGroup,
) -> Result<ResolvedK<'a>> {
    let n_orbits = w.root_orbits.len();
    match spec {
        KSpec::List(v) => {
            let vals = orbit_values(v, n_orbits)?;
            Ok(ResolvedK::Numeric(
                format!("k={}", cell_rat_vec(&vals)),
                HeckeAlgebra::new(rs, w, vals)?,
            ))
        }
        KSpec::Geometric(v) => {
            let m = if v.is_empty() {
                MultiplicityFunction::geometric_complex(w)
            } else {
                MultiplicityFunction::from_orbit_values(w, &orbit_values(v, n_orbits)?)?
            };
            let h = HeckeAlgebra::from_mult(rs, w, &m)?;
            Ok(ResolvedK::Numeric(
                format!("k=geometric{}", cell_rat_vec(&h.k_orbit)),
                h,
            ))
        }
        KSpec::Generic => Ok(ResolvedK::Formal(
            "k=generic".into(),
            HeckeAlgebra::generic(rs, w),
        )),
    }
}

/// S(a)^W = the ⋆-fixed vectors, degree by degree.
pub fn hecke_fixed(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let w = WeylGroup::new(rs);
    let d = cfg.max_degree.unwrap_or(6);

    let mut cumulative = Vec::with_capacity(d as usize + 1);
    let mut acc = 0usize;
    for e in 0..=d {
        acc += invariant_basis(&w, rs.rank, e).len();
        cumulative.push(acc);
    }

    let mut entries = Vec::new();
    let mut names = Vec::new();
    for spec in hecke_battery(cfg) {
        let resolved = resolve_k(&spec, rs, &w)?;
        let (name, dims): (String, Vec<usize>) = match &resolved {
            ResolvedK::Numeric(name, h) => {
                let mut dims = Vec::new();
                for t in 0..=d {
                    dims.push(sh_fixed_space(h, t)?.len());
                }
                (name.clone(), dims)
            }
            ResolvedK::Formal(name, h) => {
                let mut dims = Vec::new();
                for t in 0..=d {
                    dims.push(sh_fixed_space(h, t)?.len());
                }
                (name.clone(), dims)
            }
        };
        for t in 0..=d as usize {
            entries.push(
                SuiteEntry::positive(
                    format!("fixed-space {name} d={t}"),
                    dims[t] == cumulative[t],
                )
                .with_witness(json!({
                    "fixed_dim": dims[t],
                    "classical_invariant_dim": cumulative[t],
                })),
            );
        }
        names.push(name);
    }
    Ok((
        echo(&[("k", names.join(";")), ("max_degree", d.to_string())]),
        entries,
    ))
}

/// ±1 eigenspace decomposition of each simple ⋆-reflection on S^{≤d}.
pub fn hecke_eigen(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let w = WeylGroup::new(rs);
    let d = cfg.max_degree.unwrap_or(6);

    let mut entries = Vec::new();
    let mut names = Vec::new();
    for spec in hecke_battery(cfg) {
        let resolved = resolve_k(&spec, rs, &w)?;
        let name = match &resolved {
            ResolvedK::Numeric(n, _) => n.clone(),
            ResolvedK::Formal(n, _) => n.clone(),
        };
        for i in 0..rs.rank {
            let rep = match &resolved {
                ResolvedK::Numeric(_, h) => eigenspace_check(h, i, d)?,
                ResolvedK::Formal(_, h) => eigenspace_check(h, i, d)?,
            };
            entries.push(
                SuiteEntry::positive(
                    format!("eigenspaces {name} simple={i} d={d}"),
                    rep.plus_ok && rep.minus_ok && rep.sums_to_whole,
                )
                .with_witness(json!({
                    "plus_dims": rep.plus_dims,
                    "minus_dims": rep.minus_dims,
                    "sums_to_whole": rep.sums_to_whole,
                })),
            );
        }
        names.push(name);
    }
    Ok((
        echo(&[("k", names.join(";")), ("max_degree", d.to_string())]),
        entries,
    ))
}

/// λ grid avoiding resonances in thirds and fifths, so every pairing with
/// a positive coroot stays away from ±1.
fn alambda_grid(rank: usize) -> Vec<Vec<Rat>> {
    let thirds: Vec<Rat> = [1, 7, 11, 13, 17].iter().map(|&n| rat(n, 3)).collect();
    let fifths: Vec<Rat> = [1, 6, 11, 16, 21].iter().map(|&n| rat(n, 5)).collect();
    match rank {
        1 => thirds.into_iter().map(|a| vec![a]).collect(),
        _ => {
            let mut grid = Vec::new();
            for a in &thirds {
                for b in &fifths {
                    grid.push(vec![a.clone(), b.clone()]);
                }
            }
            grid
        }
    }
}

/// Spectrum-generated submodule lattices of A(λ) at k̃ = −1: full
/// dimension |W| always; irreducible exactly off the λ(α∨) = ±1 walls.
pub fn a_lambda(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let w = WeylGroup::new(rs);
    let n_orbits = w.root_orbits.len();
    let (kvals, default_k) = match &cfg.k {
        None => (vec![rint(-1); n_orbits], true),
        Some(KSpec::List(v)) => {
            let vals = orbit_values(v, n_orbits)?;
            let minus_one = vals.iter().all(|x| *x == rint(-1));
            (vals, minus_one)
        }
        Some(_) => {
            return Err(Error::Invalid(
                "the a-lambda suite needs a numeric k list".into(),
            ))
        }
    };
    let h = HeckeAlgebra::new(rs, &w, kvals.clone())?;

    let mut lambdas: Vec<(Vec<Rat>, Option<bool>)> = Vec::new();
    let grid = match &cfg.lambda {
        Some(l) => vec![l.clone()],
        None => {
            if rs.rank > 2 {
                return Err(Error::Invalid(
                    "no built-in λ grid for rank > 2; pass --lambda".into(),
                ));
            }
            alambda_grid(rs.rank)
        }
    };
    for lam in grid {
        // a wall pairing λ(α∨) = ±1 forces reducibility at k̃ = −1
        let expect_irreducible = if default_k {
            Some(rs.positive_indices().all(|p| {
                let c = rs.pairing(&lam, p);
                c != rint(1) && c != rint(-1)
            }))
        } else {
            None
        };
        lambdas.push((lam, expect_irreducible));
    }
    if default_k && cfg.lambda.is_none() && rs.rank == 1 {
        // the wall point: A(λ) acquires a proper line
        lambdas.push((vec![rat(1, 2)], Some(false)));
    }

    let mut entries = Vec::new();
    for (lam, expect_irr) in &lambdas {
        let m = build_a_lambda(&h, lam)?;
        entries.push(SuiteEntry::positive(
            format!("dim λ={} = |W|", cell_rat_vec(lam)),
            m.dim == w.order(),
        ));
        let lat = submodule_lattice(&m)?;
        let witness = json!({
            "submodule_dims": lat.dims,
            "hasse": lat.hasse,
            "lattice_complete": lat.complete,
        });
        match expect_irr {
            Some(true) => entries.push(
                SuiteEntry::positive(
                    format!("irreducible λ={}", cell_rat_vec(lam)),
                    lat.irreducible,
                )
                .with_witness(witness),
            ),
            Some(false) => entries.push(
                SuiteEntry::negative(
                    format!("irreducible λ={}", cell_rat_vec(lam)),
                    lat.irreducible,
                )
                .with_witness(witness),
            ),
            None => entries.push(
                SuiteEntry::positive(format!("lattice λ={}", cell_rat_vec(lam)), true)
                    .with_witness(witness),
            ),
        }
    }
    Ok((
        echo(&[
            ("k", cell_rat_vec(&kvals)),
            ("lambda_count", lambdas.len().to_string()),
        ]),
        entries,
    ))
}

/// Ω_g acts on V(λ) by ⟨λ, λ+2ρ⟩ and Ω_W matches that scalar on the
/// single-orbit part of the zero weight space, for every swept λ.
pub fn casimir(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let cd = build_chevalley(rs)?;
    let w = WeylGroup::new(rs);
    let table = character_table(rs, &w)?;

    let mut entries = Vec::new();
    let mut swept = 0usize;
    for lambda in root_lattice_weights_below(rs, cfg.dim_cap)? {
        let v = construct_irrep(rs, &cd, &lambda, cfg.dim_cap)?;
        let rep = verify_casimir_identity(rs, &cd, &w, &table, &v)?;
        entries.push(
            SuiteEntry::positive(
                format!("casimir λ={} dim={}", cell_rat_vec(&lambda), v.dim()),
                rep.omega_g_is_scalar && rep.omega_w_matches_on_single,
            )
            .with_witness(json!({
                "scalar": cell_rat(&rep.scalar),
                "dim_vh": rep.vh_dim,
                "dim_single": rep.single_dim,
            })),
        );
        swept += 1;
    }
    Ok((
        echo(&[
            ("dim_cap", cfg.dim_cap.to_string()),
            ("lambda_count", swept.to_string()),
        ]),
        entries,
    ))
}

fn default_modules(rs: &RootSystem) -> Vec<Vec<Rat>> {
    let mut v = vec![vec![rint(0); rs.rank], rs.roots[rs.highest_root()].clone()];
    if rs.family == 'A' && rs.rank == 1 {
        // the 5-dimensional module: not small, the designated negative case
        v.push(vec![rint(2)]);
    }
    v
}

fn module_label(lambda: &[Rat], v: &Irrep) -> String {
    format!("λ={} dim={}", cell_rat_vec(lambda), v.dim())
}

/// Restriction of Hom_g(V, U(g)) to the zero weight space: the classical
/// Harish-Chandra image is W-invariant and independent, and the k̃ = −1
/// Hecke equivariance of γ̃∘Ψ holds copy by copy exactly for small V.
pub fn hc_equivariance(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let cd = build_chevalley(rs)?;
    let w = WeylGroup::new(rs);
    let table = character_table(rs, &w)?;
    let d = (cfg.max_degree.unwrap_or(6) as usize).min(max_degree_for(cd.dim()));

    let mut entries = Vec::new();

    let classical = classical_hc_check(rs, &cd, &w, d)?;
    entries.push(
        SuiteEntry::positive(format!("classical-invariance d={d}"), classical.all_invariant)
            .with_witness(json!({
                "center_dim": classical.center_dim,
                "images": classical.images.iter().map(poly_string).collect::<Vec<_>>(),
            })),
    );
    entries.push(SuiteEntry::positive(
        format!("classical-independence d={d}"),
        classical.independent,
    ));

    let modules = match &cfg.lambda {
        Some(l) => vec![l.clone()],
        None => default_modules(rs),
    };
    for lambda in &modules {
        let v = construct_irrep(rs, &cd, lambda, cfg.dim_cap)?;
        let zdec = zero_weight_decomposition(rs, &cd, &w, &table, &v)?;
        let small = is_small(rs, lambda)?;
        let copies = hom_copies(rs, &cd, &v, d)?;
        let label = module_label(lambda, &v);
        for (ci, copy) in copies.iter().enumerate() {
            let rep = hecke_equivariance_test(rs, &cd, &w, &zdec, &v, copy)?;
            let name = format!("equivariance {label} copy={ci} deg={}", copy.degree);
            let restricts_to_zero = !vh_image_in_complement(&cd, &v, copy);
            if small || !restricts_to_zero {
                entries.push(SuiteEntry::positive(name, rep.pass));
            } else {
                let mut e = SuiteEntry::negative(name, rep.pass);
                if let Some(wit) = &rep.witness {
                    e = e.with_witness(json!({
                        "simple": wit.simple,
                        "basis": wit.basis,
                        "lhs": poly_string(&wit.lhs),
                        "rhs": poly_string(&wit.rhs),
                    }));
                }
                entries.push(e);
            }
        }
        entries.push(SuiteEntry::positive(
            format!("gamma-injectivity {label} copies={}", copies.len()),
            gamma_injectivity_check(rs, &cd, &v, &copies),
        ));
    }

    Ok((
        echo(&[
            ("max_degree", d.to_string()),
            ("module_count", modules.len().to_string()),
        ]),
        entries,
    ))
}

/// Graded comparison in S(g): the image of Hom_g(V, S(g)) inside
/// Hom_W(V^h, S(h)) fills every degree exactly for small V, and the first
/// gap is recorded otherwise.
pub fn broer_graded(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    let cd = build_chevalley(rs)?;
    let w = WeylGroup::new(rs);
    let table = character_table(rs, &w)?;
    let d = cfg
        .max_degree
        .unwrap_or(5)
        .min(max_degree_for(cd.dim()) as u32);

    let modules = match &cfg.lambda {
        Some(l) => vec![l.clone()],
        None => default_modules(rs),
    };
    let mut entries = Vec::new();
    for lambda in &modules {
        let v = construct_irrep(rs, &cd, lambda, cfg.dim_cap)?;
        let zdec = zero_weight_decomposition(rs, &cd, &w, &table, &v)?;
        let small = is_small(rs, lambda)?;
        let rep = sym_hom_copies(rs, &cd, &w, &zdec, &v, d)?;
        let label = module_label(lambda, &v);
        let witness = json!({
            "rows": rep.rows.iter().map(|r| json!({
                "degree": r.degree,
                "hom_g": r.hom_g,
                "image": r.image,
                "hom_w": r.hom_w,
            })).collect::<Vec<_>>(),
            "first_gap": rep.first_gap,
        });
        let name = format!("graded-surjectivity {label} d={d}");
        if small {
            entries.push(
                SuiteEntry::positive(name, rep.first_gap.is_none()).with_witness(witness),
            );
        } else {
            entries.push(
                SuiteEntry::negative(name, rep.first_gap.is_none()).with_witness(witness),
            );
        }
    }
    Ok((
        echo(&[
            ("max_degree", d.to_string()),
            ("module_count", modules.len().to_string()),
        ]),
        entries,
    ))
}

/// Column determinants of two adjoint copies on seeded pairs of Cartan
/// inputs: antisymmetry, vanishing on the diagonal, and the 2×2
/// determinant identity for the Harish-Chandra images.
pub fn column_det(cfg: &RunConfig, rs: &RootSystem) -> Result<SuiteOutput> {
    if rs.rank < 2 {
        return Err(Error::Invalid(
            "the column-det suite needs rank ≥ 2 for independent Cartan inputs".into(),
        ));
    }
    let cd = build_chevalley(rs)?;
    let theta = rs.roots[rs.highest_root()].clone();
    let v = construct_irrep(rs, &cd, &theta, cfg.dim_cap)?;
    let copies = hom_copies(rs, &cd, &v, 2)?;
    if copies.len() < 2 {
        return Err(Error::Invalid(format!(
            "expected two adjoint copies in degree ≤ 2, found {}",
            copies.len()
        )));
    }
    let pair = &copies[..2];
    let cap = (pair[0].degree + pair[1].degree) as usize;

    // Cartan inputs, drawn in h-coordinates and placed on the t letters
    let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
    let mut draw_pair = || -> (Vec<Rat>, Vec<Rat>) {
        loop {
            let h1: Vec<Rat> = (0..rs.rank).map(|_| random_rat(&mut rng, 4, 3)).collect();
            let h2: Vec<Rat> = (0..rs.rank).map(|_| random_rat(&mut rng, 4, 3)).collect();
            let span = Subspace::from_spanning(rs.rank, vec![h1.clone(), h2.clone()]);
            if span.dim() == 2 {
                return (h1, h2);
            }
        }
    };
    let letters = |h: &[Rat]| -> Vec<Rat> {
        let mut x = vec![rint(0); cd.dim()];
        x[cd.n_pos..cd.n_pos + rs.rank].clone_from_slice(h);
        x
    };

    let mut entries = Vec::new();
    for p in 0..3 {
        let (c1, c2) = draw_pair();
        let (h1, h2) = (letters(&c1), letters(&c2));
        let chk = column_det_pair_check(rs, &cd, pair, &h1, &h2, cap)?;
        let tag = format!(
            "pair={p} h1={} h2={}",
            cell_rat_vec(&c1),
            cell_rat_vec(&c2)
        );
        entries.push(SuiteEntry::positive(
            format!("antisymmetry {tag}"),
            chk.antisymmetric,
        ));
        entries.push(SuiteEntry::positive(
            format!("diagonal-vanishes {tag}"),
            chk.diagonal_vanishes,
        ));
        entries.push(
            SuiteEntry::positive(format!("hc-determinant {tag}"), chk.identity_holds)
                .with_witness(json!({
                    "column_det": pbw_json(&chk.coldet),
                    "gamma_image": poly_string(&chk.gamma_lhs),
                    "determinant": poly_string(&chk.det_rhs),
                })),
        );
    }
    Ok((
        echo(&[
            ("copy_degrees", format!("({},{})", pair[0].degree, pair[1].degree)),
            ("pairs", "3".into()),
        ]),
        entries,
    ))
}
