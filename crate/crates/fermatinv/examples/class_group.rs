//! Class groups of imaginary quadratic fields from reduced binary
//! quadratic forms under Gauss composition.

use fermatinv::quadclass::class_group;

fn main() -> fermatinv::Result<()> {
    for d in [-23i128, -127, -471, -3299] {
        let cg = class_group(d)?;
        println!(
            "d = {d}: h = {}, structure Z/{}, cyclic: {}",
            cg.h(),
            cg.structure()
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(" x Z/"),
            cg.is_cyclic()
        );
        for f in cg.forms() {
            println!(
                "  ({}, {}, {})  order {}",
                f.a(),
                f.b(),
                f.c(),
                cg.order_of(f)?
            );
        }
    }

    // A noncyclic example: d = -3299 has structure Z/3 x Z/9.
    let cg = class_group(-3299)?;
    println!(
        "\ngenerators of Cl(-3299): {}",
        cg.generators()
            .iter()
            .map(|f| format!("({}, {}, {})", f.a(), f.b(), f.c()))
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}
