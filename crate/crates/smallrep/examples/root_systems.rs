//! Walk through the basic root-system data: roots, Cartan matrix, ρ, the
//! two invariant forms, Weyl group sizes and conjugacy classes.

use smallrep::report::cell_rat_vec;
use smallrep::rootsys::{build_root_system, weyl::WeylGroup};

fn main() {
    for (f, r) in [('A', 2), ('B', 2), ('G', 2), ('B', 3), ('F', 4)] {
        let rs = build_root_system(f, r).unwrap();
        let w = WeylGroup::new(&rs);
        println!("{}:", rs.type_name());
        println!("  roots: {} ({} positive)", rs.roots.len(), rs.n_positive);
        println!("  dual Coxeter number: {}", rs.dual_coxeter);
        println!("  rho = {}", cell_rat_vec(&rs.rho()));
        println!(
            "  |W| = {}, conjugacy classes: {}, root orbits: {}",
            w.order(),
            w.class_representatives().len(),
            w.root_orbits.len()
        );
        print!("  Cartan matrix:");
        for i in 0..rs.rank {
            let row: Vec<String> = (0..rs.rank)
                .map(|j| rs.cartan[i][j].to_string())
                .collect();
            print!(" [{}]", row.join(" "));
        }
        println!();

        // the highest root pairs to the Killing form's normalization:
        // ⟨θ, θ⟩_killing = 1/(2h∨) · ⟨θ, θ⟩_std · (2h∨/⟨θ,θ⟩_std) ... just
        // print both forms on θ
        let theta = &rs.roots[rs.highest_root()];
        println!(
            "  ⟨θ,θ⟩_std = {}, ⟨θ,θ⟩_killing = {}",
            rs.ip_std(theta, theta),
            rs.ip_killing(theta, theta)
        );
        println!();
    }
}
