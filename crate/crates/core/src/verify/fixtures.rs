//! Literal reference data bundled from `fixtures/`.

use std::collections::BTreeMap;

use crate::enumeration::{EvenPadding, Partition};
use crate::qalgebra::XPoly;
use crate::{Error, Result};

const EUCLID_UNWEIGHTED: &str = include_str!("../../fixtures/euclid_unweighted.txt");
const EUCLID_WEIGHTED: &str = include_str!("../../fixtures/euclid_weighted.txt");
const PARTITIONS_15: &str = include_str!("../../fixtures/partitions_15.txt");
const WEIGHTS_D3: &str = include_str!("../../fixtures/weights_d3.txt");
const SHAPES: &str = include_str!("../../fixtures/shapes.txt");
const DECOMPOSITIONS: &str = include_str!("../../fixtures/decompositions.txt");

fn data_lines(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect())
}

fn field<'a>(fields: &[&'a str], i: usize) -> Result<&'a str> {
    fields
        .get(i)
        .copied()
        .ok_or_else(|| Error::Parse(format!("fixture line {fields:?} is missing field {i}")))
}

fn number<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Parse(format!("invalid number {s:?} in fixture")))
}

/// Unweighted series coefficients by degree.
pub fn euclid_unweighted() -> Result<Vec<(usize, u64)>> {
    data_lines(EUCLID_UNWEIGHTED)
        .map(|f| Ok((number(field(&f, 0)?)?, number(field(&f, 1)?)?)))
        .collect()
}

/// Weighted series coefficients by degree.
pub fn euclid_weighted() -> Result<Vec<(usize, XPoly)>> {
    data_lines(EUCLID_WEIGHTED)
        .map(|f| Ok((number(field(&f, 0)?)?, field(&f, 1)?.parse()?)))
        .collect()
}

pub fn partitions_of_15() -> Result<Vec<Partition>> {
    data_lines(PARTITIONS_15)
        .map(|f| field(&f, 0)?.parse())
        .collect()
}

/// `(partition, phi)` rows for three-part partitions.
pub fn weights_d3() -> Result<Vec<(Partition, u64)>> {
    data_lines(WEIGHTS_D3)
        .map(|f| Ok((field(&f, 0)?.parse()?, number(field(&f, 1)?)?)))
        .collect()
}

/// Shape `(d, n)` with its nonzero terms `{q-degree: coefficient}`.
pub type ShapeRow = ((usize, u32), BTreeMap<usize, XPoly>);

pub fn shapes() -> Result<Vec<ShapeRow>> {
    data_lines(SHAPES)
        .map(|f| {
            let d = number(field(&f, 0)?)?;
            let n = number(field(&f, 1)?)?;
            let terms = f[2..]
                .iter()
                .map(|t| {
                    let (k, c) = t
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("invalid term {t:?}")))?;
                    Ok((number(k)?, c.parse()?))
                })
                .collect::<Result<_>>()?;
            Ok(((d, n), terms))
        })
        .collect()
}

pub fn decompositions() -> Result<Vec<(Partition, Partition, EvenPadding)>> {
    data_lines(DECOMPOSITIONS)
        .map(|f| {
            let pad = field(&f, 2)?
                .split('+')
                .map(number)
                .collect::<Result<Vec<u32>>>()?;
            Ok((
                field(&f, 0)?.parse()?,
                field(&f, 1)?.parse()?,
                EvenPadding::new(pad)?,
            ))
        })
        .collect()
}
