//! Output-size measurements on both random families, with fitted exponents.

use paritysep::bench::{run_bench, Family};

fn main() -> paritysep::Result<()> {
    for (family, sizes) in [
        (Family::RandomPm, vec![10, 20, 40, 80, 160]),
        (Family::Random3Cnf, vec![50, 100, 200, 400, 800]),
    ] {
        let report = run_bench(family, &sizes, 7)?;
        println!("{family:?}");
        for r in &report.rows {
            let base = r.baseline_vertices.map_or("-".into(), |b| b.to_string());
            println!(
                "  size {:>4}: parity {:>7} vertices (ratio {:.1}), baseline {base}",
                r.size, r.parity_vertices, r.parity_ratio
            );
        }
        println!(
            "  exponents: parity {:?}, baseline {:?}",
            report.parity_exponent, report.baseline_exponent
        );
    }
    Ok(())
}
