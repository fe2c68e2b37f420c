//! Fine and coarse Wigner tables of two 4-qubit states under both GF(4)
//! coarse grainings.
use nalgebra::DVector;
use num_complex::Complex64;
use qcoarse::field::{CosetPartition, Field, FieldElement};
use qcoarse::io::wigner_text;
use qcoarse::phase_space::PhaseSpace;
use qcoarse::wigner::{block_sum, coarse_wigner, wigner_of_state, QuantumState};

fn state(indices: &[usize]) -> qcoarse::Result<QuantumState> {
    let mut v = DVector::zeros(16);
    for &k in indices {
        v[k] = Complex64::new(0.5, 0.0);
    }
    QuantumState::from_vector(v)
}

fn main() -> qcoarse::Result<()> {
    let space = PhaseSpace::new(Field::canonical(4)?);
    let f = space.field();
    let partitions = [
        (
            "basis {1, σ}",
            CosetPartition::general(f, 2, &[FieldElement::ONE, f.primitive_element()])?,
        ),
        ("subfield", CosetPartition::subfield(f, 2)?),
    ];
    let states = [
        (
            "(|00>+|11>)(|00>+|11>)/2",
            state(&[0b0000, 0b0011, 0b1100, 0b1111])?,
        ),
        (
            "(|0001>+|0010>+|0100>+|1000>)/2",
            state(&[0b0001, 0b0010, 0b0100, 0b1000])?,
        ),
    ];
    for (name, rho) in &states {
        let fine = wigner_of_state(&space, rho)?;
        println!("### {name}\nfine table (rows: Fourier basis, columns: computational basis)");
        print!("{}", wigner_text(&fine));
        for (pname, p) in &partitions {
            let coarse = coarse_wigner(&space, rho, p)?;
            let gap = coarse.max_abs_diff(&block_sum(&space, &fine, p)?);
            println!("\ncoarse, {pname} (block-sum gap {gap:.1e})");
            print!("{}", wigner_text(&coarse));
        }
        println!();
    }
    Ok(())
}
