//! Sweep the dominant root-lattice weights of B2 with dim V(λ) ≤ 40 and
//! flag the small and quasi-small ones. Exactly four are quasi-small, and
//! the largest of them is quasi-small without being small.

use smallrep::report::cell_rat_vec;
use smallrep::repth::chars::character_table;
use smallrep::repth::classify_sweep;
use smallrep::rootsys::chevalley::build_chevalley;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};

fn main() {
    let rs = build_root_system('B', 2).unwrap();
    let cd = build_chevalley(&rs).unwrap();
    let w = WeylGroup::new(&rs);
    let table = character_table(&rs, &w).unwrap();

    let rows = classify_sweep(&rs, &cd, &w, &table, 40).unwrap();
    println!("λ        dim  small  quasi-small  V^h = single ⊕ double  constituents of single");
    for r in &rows {
        let cons: Vec<String> = r
            .w_constituents
            .iter()
            .map(|(n, m)| if *m == 1 { n.clone() } else { format!("{m}·{n}") })
            .collect();
        println!(
            "{:8} {:4} {:6} {:12} {} = {} ⊕ {}{:13}{}",
            cell_rat_vec(&r.lambda),
            r.dim,
            r.small,
            r.quasi_small,
            r.dim_vh,
            r.dim_single,
            r.dim_double,
            "",
            if cons.is_empty() { "-".into() } else { cons.join(" + ") }
        );
    }

    let quasi: Vec<String> = rows
        .iter()
        .filter(|r| r.quasi_small)
        .map(|r| cell_rat_vec(&r.lambda))
        .collect();
    println!("\nquasi-small set: {}", quasi.join(", "));
    assert_eq!(quasi.len(), 4);
}
