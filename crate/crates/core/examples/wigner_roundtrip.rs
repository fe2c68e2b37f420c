//! Wigner table of a random mixed state, its inversion, and line sums.
use nalgebra::DMatrix;
use num_complex::Complex64;
use qcoarse::field::Field;
use qcoarse::phase_space::{LineId, PhaseSpace};
use qcoarse::wigner::{marginal_line, reconstruct_state, wigner_of_state, QuantumState};

fn main() -> qcoarse::Result<()> {
    let space = PhaseSpace::new(Field::canonical(3)?);
    let dim = space.dim();

    // A fixed, full-rank density matrix: A A† / Tr.
    let a = DMatrix::from_fn(dim, dim, |r, c| {
        Complex64::new(
            ((r * 7 + c * 3) % 5) as f64 - 2.0,
            ((r + 2 * c) % 3) as f64 - 1.0,
        )
    });
    let m = &a * a.adjoint();
    let state = QuantumState::from_density(&m / m.trace())?;

    let w = wigner_of_state(&space, &state)?;
    println!("sum W = {:.12}", w.total());
    let negative = w.values.iter().flatten().filter(|&&x| x < -1e-12).count();
    println!("negative entries: {negative} of {}", dim * dim);

    let back = reconstruct_state(&space, &w)?;
    println!(
        "reconstruction error (Frobenius): {:.2e}",
        (back.density() - state.density()).norm()
    );

    println!("\nline sums against projector probabilities:");
    for slope in space.slopes() {
        let line = LineId::new(slope, space.field().primitive_element());
        let sum = w.sum_over(&space, &space.line_points(line));
        let p = state
            .expectation(&space.line_projector(marginal_line(&space, line))?)
            .re;
        println!(
            "  slope {:>4}: {sum:+.6} vs {p:+.6}",
            slope.label(space.field())
        );
    }
    Ok(())
}
