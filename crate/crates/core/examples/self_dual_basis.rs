//! Self-dual bases and coordinate expansion for N = 1..=6.
use qcoarse::field::{Basis, Field};

fn main() -> qcoarse::Result<()> {
    for n in 1..=6 {
        let f = Field::canonical(n)?;
        let basis = Basis::self_dual(&f);
        let labels: Vec<String> = basis
            .elements()
            .iter()
            .map(|&e| f.label(e).to_string())
            .collect();
        println!("N={n}  {{{}}}", labels.join(", "));
    }

    let f = Field::canonical(3)?;
    let basis = Basis::self_dual(&f);
    println!("\nGF(8) coordinates in the self-dual basis:");
    for a in f.power_order() {
        let coords = basis.expand(&f, a);
        assert_eq!(basis.combine(&coords), a);
        println!("{:>4} -> {:?}", f.label(a).to_string(), coords);
    }
    Ok(())
}
