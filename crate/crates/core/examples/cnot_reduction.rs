//! CNOT circuits that collapse survivor sets onto fewer qubits.
use std::collections::BTreeSet;

use qcoarse::cli::parse_cnots;
use qcoarse::field::{CosetPartition, Field, FieldElement};
use qcoarse::phase_space::PhaseSpace;

fn show(title: &str, space: &PhaseSpace, p: &CosetPartition, gates: &str) -> qcoarse::Result<()> {
    let table = space.survivor_table(p)?;
    let after = table.conjugated(&parse_cnots(gates)?)?;
    let before: BTreeSet<String> = table.operators().map(|o| o.letters_string()).collect();
    let after: BTreeSet<String> = after.operators().map(|o| o.letters_string()).collect();
    println!("{title}  [CNOT {gates}]");
    println!(
        "  before: {}",
        before.into_iter().collect::<Vec<_>>().join(" ")
    );
    println!(
        "  after:  {}",
        after.into_iter().collect::<Vec<_>>().join(" ")
    );
    Ok(())
}

fn main() -> qcoarse::Result<()> {
    let s8 = PhaseSpace::new(Field::canonical(3)?);
    let f = s8.field();
    let sp = |k| f.primitive_power(k);
    let p = CosetPartition::general(f, 1, &[FieldElement::ONE, sp(1), sp(2)])?;
    show("dim 8, basis {1, σ, σ^2}", &s8, &p, "1:2,1:3,2:1,3:1")?;

    let s16 = PhaseSpace::new(Field::canonical(4)?);
    let f = s16.field();
    let p = CosetPartition::general(f, 2, &[FieldElement::ONE, f.primitive_element()])?;
    show("dim 16, basis {1, σ}", &s16, &p, "4:3,3:2,3:1,1:4,2:4")?;
    let p = CosetPartition::subfield(f, 2)?;
    show("dim 16, subfield", &s16, &p, "1:3,2:4")?;
    Ok(())
}
