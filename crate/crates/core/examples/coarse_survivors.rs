//! Survivor tables for GF(16) viewed as a quadratic extension of GF(4).
use qcoarse::field::{CosetPartition, Field, FieldElement};
use qcoarse::phase_space::PhaseSpace;

fn main() -> qcoarse::Result<()> {
    let space = PhaseSpace::new(Field::canonical(4)?);
    let f = space.field();
    let general = CosetPartition::general(f, 2, &[FieldElement::ONE, f.primitive_element()])?;
    let subfield = CosetPartition::subfield(f, 2)?;

    for (name, p) in [("basis {1, σ}", &general), ("subfield", &subfield)] {
        println!("== {name} ==");
        for c in p.cosets() {
            let els: Vec<String> = c
                .elements()
                .iter()
                .map(|&e| f.label(e).to_string())
                .collect();
            println!(
                "  coset {:>5}: {}",
                f.label(c.representative()).to_string(),
                els.join(" ")
            );
        }
        print!("{}", space.survivor_table(p)?.render_text(f));
        println!();
    }
    Ok(())
}
