//! Schur functions in the elementary basis two ways: the Jacobi–Trudi
//! determinant, and Kostka numbers followed by a triangular solve.

use chromsym::partition::partitions_of;
use chromsym::symfunc::{jacobi_trudi_s_in_e, Basis, SymFunc};

fn main() -> chromsym::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let mut agree = 0;
    for lambda in partitions_of(n) {
        let jt = jacobi_trudi_s_in_e(&lambda);
        let via_kostka = SymFunc::basis_element(Basis::S, lambda.clone()).to_basis(Basis::E)?;
        if jt == via_kostka {
            agree += 1;
        }
        println!("s_{lambda} = {jt}");
    }
    println!("{agree} of {} partitions agree across both routes", partitions_of(n).len());

    let p = SymFunc::basis_element(Basis::P, "2,1".parse()?);
    println!("p_(2,1) = {}", p.to_basis(Basis::E)?);
    Ok(())
}
