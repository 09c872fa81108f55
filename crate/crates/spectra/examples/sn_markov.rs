//! Probabilistic modeling over permutations: Young-orthogonal irreps,
//! diffusion as a spectral scalar per irrep, Bayesian conditioning on
//! patterns, and marginal queries, built into an identity-tracking toy.
//!
//! Run with `cargo run --example sn_markov`.

use spectra::sn::{
    diffusion_kernel, dominance, is_class_function, lift, marginal_pattern, markov_model,
    partitions, pattern_indicator, sn_fourier, Dominance, IrrepTable, PatternMap, Permutation,
    SnScale, Step,
};

fn main() -> spectra::Result<()> {
    let n = 5usize;
    let table = IrrepTable::new(n)?;

    // The irreps of S5 and their dominance order against (3,2).
    println!("irreps of S{n} (partition, dimension, dominance vs (3,2)):");
    let reference = spectra::sn::Partition::new(vec![3, 2])?;
    for p in partitions(n)? {
        let relation = match dominance(&p, &reference)? {
            Dominance::Dominates => "dominates",
            Dominance::DominatedBy => "dominated by",
            Dominance::Equal => "equals",
            Dominance::Incomparable => "incomparable",
        };
        println!("  ({:>9})  d = {:>2}  {relation} (3,2)", p.label(), p.dimension());
    }
    let squares: usize = partitions(n)?.iter().map(|p| p.dimension().pow(2)).sum();
    println!("sum of squared dimensions = {squares} = 5!\n");

    // The diffusion kernel is a class function: its Fourier coefficients are
    // scalar matrices.
    let kernel = diffusion_kernel(n, 0.6)?;
    println!("diffusion kernel is a class function: {}", is_class_function(&kernel));
    let spectrum = sn_fourier(&kernel, &table, SnScale::Standard)?;
    print!("per-irrep scalars: ");
    for coeff in spectrum.coefficients() {
        print!("{:+.3} ", coeff[[0, 0]] / spectrum.coefficients()[0][[0, 0]]);
    }
    println!("\n");

    // Track five badges: they start in order, drift by swaps, and we observe
    // that badge 2 is at position 4, then that badge 1 stayed at position 1.
    let observe = |objects: Vec<usize>, positions: Vec<usize>| -> spectra::Result<Step> {
        Ok(Step::Condition(pattern_indicator(
            n,
            &PatternMap::new(vec![(objects, positions)])?,
        )?))
    };
    let steps = vec![
        Step::Diffuse(0.7),
        Step::Diffuse(0.7),
        observe(vec![1], vec![3])?, // badge 2 seen at position 4 (0-based 1 → 3)
        Step::Diffuse(0.8),
        observe(vec![0], vec![0])?, // badge 1 confirmed at position 1
    ];
    let model = markov_model(n, &steps, &table, SnScale::Standard)?;

    println!("most likely assignments after two observations:");
    let mut ranked: Vec<(usize, f64)> = model.values().iter().copied().enumerate().collect();
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("finite"));
    for (rank, probability) in ranked.iter().take(5) {
        let p = Permutation::from_lex_rank(n, *rank)?;
        println!("  {}  probability {probability:.4}", p.one_line_string());
    }
    println!();

    // Marginal queries against the posterior.
    for (label, objects, positions) in [
        ("badge 2 still near position 4: {2}->{4}", vec![1], vec![3]),
        ("badges 4,5 on positions 4,5", vec![3, 4], vec![3, 4]),
    ] {
        let pattern = PatternMap::new(vec![(objects, positions)])?;
        println!("P({label}) = {:.4}", marginal_pattern(&model, &pattern)?);
    }
    println!();

    // Lifting a per-position score to the group: right-invariant under the
    // stabiliser of the base point.
    let position_score = [0.0, 0.25, 0.5, 0.75, 1.0];
    let lifted = lift(&position_score, 0)?;
    println!(
        "lifted score of the identity (base point 0): {}",
        lifted.value(&Permutation::identity(n))?
    );
    let h = Permutation::from_one_line(&[1, 3, 2, 5, 4])?; // fixes position 1
    println!(
        "lifted score after composing with a stabiliser element: {}",
        lifted.value(&h)?
    );
    Ok(())
}
