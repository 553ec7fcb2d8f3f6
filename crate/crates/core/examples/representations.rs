//! Weight multiplicities and tensor product decompositions.

use reftype::repthy::{dominant_weight_system, tensor_decomposition, weyl_dim};
use reftype::rootsys::{Family, LieType, RootSystem};
use reftype::weyl::WeylGroup;

fn main() -> reftype::Result<()> {
    let rs = RootSystem::new(LieType::new(Family::B, 2)?);
    let wg = WeylGroup::generate(&rs);

    let lambda = [2, 1];
    let ws = dominant_weight_system(&rs, &wg, &lambda)?;
    println!("V({lambda:?}) of {}: dim {}", rs.lie_type(), weyl_dim(&rs, &lambda));
    for (mu, m) in &ws.dominant_entries {
        println!("  m({mu}) = {m}");
    }
    println!("  Σ |W μ| m(μ) = {}", ws.total_dimension(&rs));

    let (a, b) = ([1, 0], [0, 1]);
    let dec = tensor_decomposition(&rs, &wg, &a, &b)?;
    let parts: Vec<String> = dec.iter().map(|(l, m)| format!("{m}·V({l})")).collect();
    println!("V({a:?}) ⊗ V({b:?}) = {}", parts.join(" + "));
    Ok(())
}
