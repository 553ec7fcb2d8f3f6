//! Reduced coefficient tables of SU(3) and the dimension sum rule.

use num_traits::Zero;
use reftype::costrat::d_coeffs;
use reftype::lattice::{pq_map, ExpKernel};
use reftype::relcoeff::coeff_table;
use reftype::repthy::weyl_dim;
use reftype::rootsys::{Family, LieType, RootSystem};
use reftype::subsys::enumerate_classes;
use reftype::weyl::WeylGroup;
use reftype::Q;

fn main() -> reftype::Result<()> {
    let rs = RootSystem::new(LieType::new(Family::A, 2)?);
    let wg = WeylGroup::generate(&rs);
    let pq = pq_map(&rs, &ExpKernel::simply_connected(rs.rank()))?;
    for class in enumerate_classes(&rs, &wg) {
        let table = coeff_table(&rs, &wg, &class, &pq)?;
        let d = d_coeffs(&rs, &wg, &class, &table)?;
        println!("class {} (|W_Γ| = {})", class.label, table.reduction_factor);
        let mut sum = Q::zero();
        for (lambda, c) in &table.entries {
            sum += *c * Q::from_integer(weyl_dim(&rs, &lambda.0));
            println!("  λ = {lambda}  C/N = {c:>4}  full C = {}", table.full(&lambda.0));
        }
        for mu in d.support() {
            println!("  μ = {mu}  D = {}", d.get(&mu.0));
        }
        println!("  Σ C/N · dim = {sum}");
    }
    Ok(())
}
