//! Truncated K blocks and the vanishing conditions for the trivial stratum of SU(3).

use num_traits::Zero;
use reftype::costrat::{d_coeffs, is_stable, k_block, norm_ratio, vanishing_system, HbarConfig};
use reftype::lattice::{pq_map, ExpKernel};
use reftype::relcoeff::coeff_table;
use reftype::rootsys::{Family, LieType, RootSystem};
use reftype::subsys::{build_poset, enumerate_classes, find_class};
use reftype::weyl::WeylGroup;
use reftype::Q;

fn main() -> reftype::Result<()> {
    let rs = RootSystem::new(LieType::new(Family::A, 2)?);
    let wg = WeylGroup::generate(&rs);
    let pq = pq_map(&rs, &ExpKernel::simply_connected(rs.rank()))?;
    let classes = enumerate_classes(&rs, &wg);
    let class = find_class(&rs, &classes, "0")?;
    let d = d_coeffs(&rs, &wg, class, &coeff_table(&rs, &wg, class, &pq)?)?;

    let cutoff2 = Q::from_integer(40);
    let block = k_block(&rs, &wg, &d, cutoff2);
    let cfg = HbarConfig { hbar: 0.5, dim_g: 8 };
    println!("class 0, ‖λ+δ‖² ≤ {cutoff2}: {} rows", block.rows.len());
    for lambda in &block.rows {
        let row = block.row(&lambda.0);
        let cells: Vec<String> = row.iter().map(|(lp, v)| format!("{lp}:{v}")).collect();
        let flag = if block.incomplete_rows.contains(lambda) { " (truncated)" } else { "" };
        let stable = if is_stable(&rs, &d, &lambda.0) { "stable" } else { "" };
        println!("  {lambda} {stable:<6} {}{flag}", cells.join(" "));
    }
    let r = norm_ratio(&rs, cfg, &[1, 1], &[0, 0])?;
    println!("N(11)/N(00) = exp(ħ·{}) = {:.6}", r.exponent, r.value);

    let poset = build_poset(&wg, classes);
    let full = poset.classes.len() - 1;
    let rows = vanishing_system(&rs, &wg, &poset, full, &pq, Q::from_integer(20))?;
    let nonzero = rows.iter().filter(|c| c.row.values().any(|v| !v.is_zero())).count();
    println!("{} conditions below the full class, {nonzero} nonzero", rows.len());
    Ok(())
}
