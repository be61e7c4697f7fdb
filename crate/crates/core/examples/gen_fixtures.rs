//! regenerates the fixture corpus in fixtures/ at the workspace root.
//!
//! run with: cargo run -p superjordan --example gen_fixtures

use std::collections::BTreeMap;
use std::path::Path;

use superjordan::construct::{
    direct_sum, dual_kac0, free_module, kac0, omega, trivial, w_module,
};
use superjordan::format::write_module_file;
use superjordan::{rint, AlgebraSpec, Matrix, Parity, Supermodule};

/// four-dimensional indecomposable with x mapping both head vectors down
/// and y linking the first head vector to the second socle vector; its
/// non-projective locus is the y-axis alone.
fn zigzag4_xyx() -> Supermodule {
    let mut actions = BTreeMap::new();
    actions.insert(
        "x1".to_string(),
        Matrix::from_triplets(4, 4, [(2, 0, rint(1)), (3, 1, rint(1))]).unwrap(),
    );
    actions.insert(
        "y1".to_string(),
        Matrix::from_triplets(4, 4, [(3, 0, rint(1))]).unwrap(),
    );
    Supermodule::new(
        AlgebraSpec::sl11(),
        vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
        actions,
    )
    .unwrap()
}

/// mirror of `zigzag4_xyx` with the roles of x and y exchanged; its
/// non-projective locus is the x-axis alone.
fn zigzag4_yxy() -> Supermodule {
    let mut actions = BTreeMap::new();
    actions.insert(
        "y1".to_string(),
        Matrix::from_triplets(4, 4, [(2, 0, rint(1)), (3, 1, rint(1))]).unwrap(),
    );
    actions.insert(
        "x1".to_string(),
        Matrix::from_triplets(4, 4, [(2, 1, rint(1))]).unwrap(),
    );
    Supermodule::new(
        AlgebraSpec::sl11(),
        vec![Parity::Even, Parity::Even, Parity::Odd, Parity::Odd],
        actions,
    )
    .unwrap()
}

fn main() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&root).expect("can create the fixtures directory");
    let write = |name: &str, m: &Supermodule| {
        assert!(
            m.validate().is_empty(),
            "fixture {name} must satisfy the superalgebra relations"
        );
        write_module_file(&root.join(name), m, Some(true))
            .unwrap_or_else(|e| panic!("writing {name}: {e}"));
        println!("{name}: {}, dim {} {}", m.algebra(), m.dim(), m.superdim());
    };

    let sl = AlgebraSpec::sl11();
    let e2 = AlgebraSpec::exterior(2);
    let e4 = AlgebraSpec::exterior(4);

    // trivial modules and the two Kac modules
    write("k_ev.json", &trivial(sl.clone(), Parity::Even));
    write("k_od.json", &trivial(sl.clone(), Parity::Odd));
    write("ext2_k_ev.json", &trivial(e2.clone(), Parity::Even));
    write("ext2_k_od.json", &trivial(e2.clone(), Parity::Odd));
    write("ext4_k_ev.json", &trivial(e4.clone(), Parity::Even));
    write("kac0.json", &kac0());
    write("dual_kac0.json", &dual_kac0());
    write("k0_plus_dualk0.json", &direct_sum(&kac0(), &dual_kac0()).unwrap());

    // trivial-plus-Kac sums and their direct sum
    let ex2_m = direct_sum(&trivial(sl.clone(), Parity::Even), &kac0()).unwrap();
    let ex2_n = direct_sum(&trivial(sl.clone(), Parity::Even), &dual_kac0()).unwrap();
    write("ex2_m.json", &ex2_m);
    write("ex2_n.json", &ex2_n);
    write("ex2_sum.json", &direct_sum(&ex2_m, &ex2_n).unwrap());

    // the two mirrored four-dimensional zigzags and their sum
    let m3 = zigzag4_xyx();
    let n3 = zigzag4_yxy();
    write("ex3_m.json", &m3);
    write("ex3_n.json", &n3);
    write("ex3_sum.json", &direct_sum(&m3, &n3).unwrap());

    // free modules
    write("ext2_free1_ev.json", &free_module(&e2, 1, Parity::Even));
    write("ext2_free1_od.json", &free_module(&e2, 1, Parity::Odd));
    write("ext4_free1_ev.json", &free_module(&e4, 1, Parity::Even));
    write("sl11_free1_ev.json", &free_module(&sl, 1, Parity::Even));

    // zigzag modules over exterior(2)
    for n in 2..=5 {
        write(&format!("w{n}.json"), &w_module(n));
    }

    // syzygies of the trivial module over exterior(2) and exterior(4)
    for (prefix, algebra) in [("ext2", &e2), ("ext4", &e4)] {
        let k = trivial(algebra.clone(), Parity::Even);
        for n in -3i64..=3 {
            let name = match n.signum() {
                0 => format!("{prefix}_omega_0.json"),
                1 => format!("{prefix}_omega_p{n}.json"),
                _ => format!("{prefix}_omega_m{}.json", -n),
            };
            write(&name, &omega(&k, n).unwrap());
        }
    }
}
