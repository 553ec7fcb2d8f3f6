//! Weyl group of B3: order, length distribution, orbits and dominant representatives.

use reftype::rootsys::{Family, LieType, RootSystem};
use reftype::weyl::WeylGroup;

fn main() -> reftype::Result<()> {
    let rs = RootSystem::new(LieType::new(Family::B, 3)?);
    let wg = WeylGroup::generate(&rs);
    println!("|W({})| = {}", rs.lie_type(), wg.order());

    let max_len = wg.elements().iter().map(|e| e.length).max().unwrap_or(0);
    let mut by_len = vec![0usize; max_len + 1];
    for e in wg.elements() {
        by_len[e.length] += 1;
    }
    println!("elements per length: {by_len:?}");

    let lambda = [1, 0, 1];
    let orbit = wg.orbit_labels(&rs, &lambda);
    println!("orbit of {lambda:?} has {} weights", orbit.len());
    let (dom, w) = wg.dominant_labels(&[-1, 2, -3]);
    println!("dominant form of [-1, 2, -3] is {dom:?} reached by an element of length {}", wg.element(w).length);

    let gamma = [0, rs.negative(0)];
    let stab = wg.setwise_stabilizer(&gamma);
    let reps = wg.coset_representatives(&stab)?;
    println!("stabilizer of roots {gamma:?}: {} elements, {} cosets", stab.len(), reps.len());
    Ok(())
}
