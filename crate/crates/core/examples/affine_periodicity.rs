//! Growth of FC involutions in affine types: periodic part, remainder and
//! detected period.

use fcinv::verify::cross_validate;
use fcinv::{Family, GroupType};

fn main() -> fcinv::Result<()> {
    for (family, n, lmax) in [(Family::AffA, 4, 40), (Family::AffA, 5, 40), (Family::AffC, 2, 60), (Family::AffD, 2, 60)] {
        let report = cross_validate(GroupType::new(family, n)?, Some(lmax))?;
        println!("{report}\n");
    }
    Ok(())
}
