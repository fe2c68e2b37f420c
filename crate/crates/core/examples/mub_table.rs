//! Rays of the phase-space grid as Pauli operator tables, and the bases
//! they define.
//!
//! Run with an optional degree: `cargo run --example mub_table -- 3`.
use qcoarse::field::Field;
use qcoarse::phase_space::PhaseSpace;

fn main() -> qcoarse::Result<()> {
    let n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let space = PhaseSpace::new(Field::canonical(n)?);
    print!("{}", space.mub_table().render_text(space.field()));

    let bases: Vec<_> = space
        .slopes()
        .into_iter()
        .map(|s| space.eigensystem(s))
        .collect::<qcoarse::Result<_>>()?;
    let mut worst: f64 = 0.0;
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i + 1..] {
            for u in &a.vectors {
                for v in &b.vectors {
                    let overlap = u.dotc(v).norm_sqr();
                    worst = worst.max((overlap - 1.0 / space.dim() as f64).abs());
                }
            }
        }
    }
    println!(
        "\n{} bases, max |‹u|v›|² deviation from 1/{}: {worst:.2e}",
        bases.len(),
        space.dim()
    );
    Ok(())
}
