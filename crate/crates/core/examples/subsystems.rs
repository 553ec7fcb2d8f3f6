//! Conjugacy classes of root subsystems and their Hasse diagram.
//!
//! `cargo run --example subsystems -- C 3 > c3.dot`

use reftype::rootsys::{Family, LieType, RootSystem};
use reftype::subsys::{build_poset, enumerate_classes};
use reftype::weyl::WeylGroup;

fn main() -> reftype::Result<()> {
    let mut args = std::env::args().skip(1);
    let family: Family = args.next().as_deref().unwrap_or("B").parse()?;
    let rank: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let rs = RootSystem::new(LieType::new(family, rank)?);
    let wg = WeylGroup::generate(&rs);
    let classes = enumerate_classes(&rs, &wg);
    eprintln!("{}: {} classes", rs.lie_type(), classes.len());
    for c in &classes {
        eprintln!(
            "  {:<10} {:>3} roots  {}",
            c.label,
            c.representative.len(),
            if c.closed() { "closed" } else { "not closed" }
        );
    }
    let poset = build_poset(&wg, classes);
    print!("{}", poset.to_dot(&rs.lie_type().to_string()));
    Ok(())
}
