use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use twistpres::catalog::CatalogKey;
use twistpres::{Kind, Variant};

/// `--g` value: a single genus or an inclusive range `a..b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusRange {
    pub lo: u32,
    pub hi: u32,
}

impl GenusRange {
    pub fn iter(&self) -> RangeInclusive<u32> {
        self.lo..=self.hi
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }
}

impl FromStr for GenusRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("expected a genus or a range a..b, got {s:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let g = num(s)?;
                (g, g)
            }
        };
        if lo > hi {
            return Err(format!("empty genus range {s:?}"));
        }
        Ok(GenusRange { lo, hi })
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

pub fn parse_kind(s: &str) -> Result<Kind, String> {
    match s.parse::<Kind>() {
        Ok(Kind::Other) | Err(_) => Err(format!("unknown kind {s:?} (use mcg or twist)")),
        Ok(k) => Ok(k),
    }
}

pub fn parse_variant(s: &str) -> Result<Variant, String> {
    match s.parse::<Variant>() {
        Ok(Variant::Raw) | Err(_) => Err(format!(
            "unknown variant {s:?} (use standard, uwF, full or reduced)"
        )),
        Ok(v) => Ok(v),
    }
}

/// Catalog keys selected by the key flags. Unset flags range over every
/// value; with all flags set and a single genus an invalid key is an error,
/// otherwise invalid combinations are skipped.
pub fn select(
    g: &GenusRange,
    s: Option<u8>,
    kind: Option<Kind>,
    variant: Option<Variant>,
) -> Result<Vec<CatalogKey>> {
    let ss: Vec<u8> = s.map_or(vec![1, 0], |s| vec![s]);
    let kinds: Vec<Kind> = kind.map_or(vec![Kind::Mcg, Kind::Twist], |k| vec![k]);
    let variants: Vec<Variant> = variant.map_or(
        vec![
            Variant::Standard,
            Variant::UwF,
            Variant::Full,
            Variant::Reduced,
        ],
        |v| vec![v],
    );
    let mut keys = Vec::new();
    let mut first_err = None;
    for gg in g.iter() {
        for &kind in &kinds {
            for &s in &ss {
                for &variant in &variants {
                    let key = CatalogKey {
                        g: gg,
                        s,
                        kind,
                        variant,
                    };
                    match key.validate() {
                        Ok(()) => keys.push(key),
                        Err(e) => {
                            first_err.get_or_insert(e);
                        }
                    }
                }
            }
        }
    }
    let explicit = g.is_single() && s.is_some() && kind.is_some() && variant.is_some();
    if explicit {
        if let Some(e) = first_err {
            bail!(e);
        }
    }
    if keys.is_empty() {
        return Err(match first_err {
            Some(e) => anyhow!("no valid catalog key selected: {e}"),
            None => anyhow!("no valid catalog key selected"),
        });
    }
    Ok(keys)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(
            "4".parse::<GenusRange>().unwrap(),
            GenusRange { lo: 4, hi: 4 }
        );
        assert_eq!(
            "3..10".parse::<GenusRange>().unwrap(),
            GenusRange { lo: 3, hi: 10 }
        );
        assert_eq!("3..=5".parse::<GenusRange>().unwrap().iter().count(), 3);
        assert!("5..3".parse::<GenusRange>().is_err());
        assert!("x".parse::<GenusRange>().is_err());
    }

    #[test]
    fn selection() {
        let all = select(&"3..12".parse().unwrap(), None, None, None).unwrap();
        assert_eq!(all.len(), 66);
        let one = select(&"4".parse().unwrap(), Some(1), Some(Kind::Twist), None).unwrap();
        assert_eq!(one.len(), 2);
        assert!(select(
            &"3".parse().unwrap(),
            Some(0),
            Some(Kind::Mcg),
            Some(Variant::Standard)
        )
        .is_err());
        assert!(select(&"3".parse().unwrap(), Some(0), Some(Kind::Mcg), None).is_err());
    }
}
