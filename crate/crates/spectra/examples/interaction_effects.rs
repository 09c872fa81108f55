//! Boolean Fourier coefficients as statistics: expected parities of a
//! distribution, spin moments, and the interaction effects of a response
//! table (the experimental-design reading).
//!
//! Run with `cargo run --example interaction_effects`.

use spectra::group::{
    expected_parity, fourier, interaction_effect, to_spin_moments, DenseFunction, GroupSpec,
};

fn main() -> spectra::Result<()> {
    // A response table over three binary treatments: the first two act
    // additively, the third interacts with the first.
    let group = GroupSpec::boolean(3)?;
    let response: Vec<f64> = (0..8usize)
        .map(|idx| {
            let (a, b, c) = (idx & 1, (idx >> 1) & 1, (idx >> 2) & 1);
            0.2 + 0.5 * a as f64 + 0.3 * b as f64 + 0.4 * (a & c) as f64
        })
        .collect();
    let f = DenseFunction::from_real(group.clone(), &response)?;

    println!("interaction effects of the response table:");
    for idx in 0..8usize {
        let k = group.unpack_frequency(idx)?;
        let effect = interaction_effect(&f, &k)?;
        let subset: Vec<String> = k
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| format!("x{}", i + 1))
            .collect();
        let label = if subset.is_empty() { "total".into() } else { subset.join("·") };
        println!("  L({label:<8}) = {effect:+.3}");
    }
    println!("x1·x2 interaction vanishes (additive); x1·x3 does not\n");

    // The effects are scaled Fourier coefficients.
    let spectrum = fourier(&f);
    let k13 = group.frequency(vec![1, 0, 1])?;
    let effect = interaction_effect(&f, &k13)?;
    let coefficient = spectrum.value(&k13)?.re;
    println!(
        "L(x1·x3) = {effect:+.3} equals (−1)^2·√8·f̂(101) = {:+.3}\n",
        8f64.sqrt() * coefficient
    );

    // For distributions, coefficients are expected parities and spin moments.
    let p = DenseFunction::from_real(group.clone(), &[0.30, 0.25, 0.05, 0.10, 0.10, 0.15, 0.03, 0.02])?;
    let moments = to_spin_moments(&p)?;
    println!("spin moments of a distribution (E[∏ (−1)^{{x_i}}] per subset):");
    for (k, moment) in &moments {
        println!(
            "  k = {}  moment {moment:+.4}  expected parity {:+.4}",
            k.bit_string(),
            expected_parity(&p, k)?
        );
    }
    Ok(())
}
