//! Building filters from a multiplicative set, a prime, seeds and the
//! Lambek construction, then inducing along a quotient map.

use sigma_noether::ring::RingMap;
use sigma_noether::torsion::{filter_from_mult_set, filter_from_prime, gabriel_closure, induced_filter, lambda_filter, meet_filters};
use sigma_noether::{FiniteRing, Ideal};

fn main() -> sigma_noether::Result<()> {
    let r = FiniteRing::zmod(12)?;
    let three = r.elements().find(|&a| r.label(a) == "3").expect("3 is in Z/12");
    let by_powers = filter_from_mult_set(&r, &[r.one(), three, r.mul(three, three)])?;
    println!("S = {{1, 3, 9}}:        {by_powers}");
    let two = Ideal::generated(&r, &[2])?;
    println!("A \\ (2):              {}", filter_from_prime(&two)?);
    println!("closure of (4):       {}", gabriel_closure(&r, &[Ideal::generated(&r, &[4])?])?);
    println!("lambda:               {}", lambda_filter(&r));
    let three_ideal = Ideal::generated(&r, &[3])?;
    let meet = meet_filters(&[filter_from_prime(&two)?, filter_from_prime(&three_ideal)?])?;
    println!("meet of complements:  {meet}");

    let q = RingMap::quotient(&Ideal::generated(&r, &[4])?);
    println!("induced on {}: {}", q.target().name(), induced_filter(&q, &by_powers)?);
    Ok(())
}
