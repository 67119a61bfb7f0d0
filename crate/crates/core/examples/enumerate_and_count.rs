//! Lists P(n,k) and compares the recurrence counts with enumeration.

use intersecting_partitions::partition::{count_all, count_partitions, count_partitions_big, enumerate_partitions};
use intersecting_partitions::{CountTable, Limits};

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    let n = 10;
    for k in 1..=n {
        let parts = enumerate_partitions(n, k, &limits)?;
        let shown: Vec<String> = parts.iter().take(4).map(|p| p.to_string()).collect();
        println!("p({n},{k}) = {:3}  {}{}", count_partitions(n, k)?, shown.join(" "), if parts.len() > 4 { " ..." } else { "" });
    }
    println!("p({n}) = {}", count_all(n)?);

    let table = CountTable::new(100)?;
    println!("p(100) = {}", table.get_all(100)?);
    println!("p(100,10) = {}", table.get(100, 10));
    println!("p(1000,10) = {}", count_partitions_big(1000, 10));
    Ok(())
}
