//! Builds the classical root systems of rank 2 and prints their data.

use reftype::rootsys::{Family, LieType, RootSystem};

fn simple_coords(rs: &RootSystem, i: usize) -> Vec<i64> {
    rs.labels_to_root_coords(rs.root_labels(i)).iter().map(|c| c.to_integer()).collect()
}

fn main() -> reftype::Result<()> {
    for family in [Family::A, Family::B, Family::C] {
        let rs = RootSystem::new(LieType::new(family, 2)?);
        println!("{}: {} roots, Cartan matrix {:?}", rs.lie_type(), rs.len(), rs.cartan());
        for i in 0..rs.n_positive() {
            println!(
                "  root {i}: {} (simple coords {:?}, |α|² = {})",
                rs.roots()[i],
                simple_coords(&rs, i),
                rs.root_length2(i)
            );
        }
        println!("  δ = {} with labels {:?}", rs.delta(), rs.delta_labels());
    }

    let d4 = RootSystem::new(LieType::new(Family::D, 4)?);
    println!("{}: |Σ| = {}, |W| = {}", d4.lie_type(), d4.len(), d4.lie_type().weyl_order());
    Ok(())
}
