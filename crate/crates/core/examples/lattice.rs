//! p/q ratios and fixed-point subsystems for Spin(5) and SO(5).

use reftype::lattice::{gamma_x, pq_map, ExpKernel, TorusPoint};
use reftype::rootsys::{Family, LieType, RootSystem};

fn simple_coords(rs: &RootSystem, i: usize) -> Vec<i64> {
    rs.labels_to_root_coords(rs.root_labels(i)).iter().map(|c| c.to_integer()).collect()
}

fn main() -> reftype::Result<()> {
    let t = LieType::new(Family::C, 2)?;
    let rs = RootSystem::new(t);
    for kernel in [ExpKernel::simply_connected(2), ExpKernel::so_odd(t)?] {
        let pq = pq_map(&rs, &kernel)?;
        println!("kernel {}", kernel.name);
        for i in 0..rs.n_positive() {
            println!("  {:?}  p/q = {}", simple_coords(&rs, i), pq[i]);
        }
        for point in ["A=0,1/2", "A=1/4,0", "A=1/3,1/3;B=0,0"] {
            let x: TorusPoint = point.parse()?;
            let g = gamma_x(&rs, &pq, &x)?;
            println!("  {point:<16} fixes {} roots, closed: {}", g.len(), g.closed);
        }
    }
    Ok(())
}
