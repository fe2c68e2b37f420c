//! Arithmetic, traces and characters in GF(16).
use qcoarse::field::Field;

fn main() -> qcoarse::Result<()> {
    let f = Field::canonical(4)?;
    println!("{f}");
    println!("{:>6} {:>6} {:>5} {:>3}", "elem", "bits", "trace", "chi");
    for a in f.power_order() {
        println!(
            "{:>6} {:>6} {:>5} {:>3}",
            f.label(a).to_string(),
            format!("{:04b}", a.bits()),
            f.trace(a),
            f.character(a)
        );
    }

    let s = f.primitive_element();
    let a = f.pow(s, 7)?;
    let b = f.pow(s, 12)?;
    println!();
    println!("σ^7 + σ^12 = {}", f.label(a + b));
    println!("σ^7 · σ^12 = {}", f.label(f.mul(a, b)));
    println!("(σ^7)^-1   = {}", f.label(f.inv(a)?));

    // x^4 + x^3 + x^2 + x + 1 is irreducible but its roots have order 5.
    if let Err(e) = Field::new(4, 0b11111) {
        println!("\nrejected: {e}");
    }
    Ok(())
}
