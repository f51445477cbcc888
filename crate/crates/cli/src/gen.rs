//! Seeded instance generation for the chart classes.

use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twobar_core::{Chart, ChartClass, Instance};

use crate::error::{CliError, Result};

/// A parsed `--class` argument: one or more class tags joined by commas.
/// `big` and `non-strictly-big` tighten the taller bar's range; a monotone
/// tag additionally orders the two bars. The two monotone tags contradict
/// each other and are rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassSpec {
    big: bool,
    non_strictly_big: bool,
    noninc: bool,
    nondec: bool,
}

impl FromStr for ClassSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<ClassSpec> {
        let mut spec = ClassSpec {
            big: false,
            non_strictly_big: false,
            noninc: false,
            nondec: false,
        };
        for part in s.split(',') {
            let class = ChartClass::from_str(part.trim()).map_err(CliError::BadClass)?;
            match class {
                ChartClass::Arbitrary => {}
                ChartClass::Big => spec.big = true,
                ChartClass::NonStrictlyBig => spec.non_strictly_big = true,
                ChartClass::MonotoneNonIncreasing => spec.noninc = true,
                ChartClass::MonotoneNonDecreasing => spec.nondec = true,
            }
        }
        if spec.noninc && spec.nondec {
            return Err(CliError::BadClass(
                "monotone-nonincreasing and monotone-nondecreasing contradict each other"
                    .to_string(),
            ));
        }
        Ok(spec)
    }
}

impl ClassSpec {
    /// Canonical tag list, used in generated instance names.
    pub fn label(&self) -> String {
        let mut tags = Vec::new();
        if self.big {
            tags.push(ChartClass::Big.tag());
        }
        if self.non_strictly_big && !self.big {
            tags.push(ChartClass::NonStrictlyBig.tag());
        }
        if self.noninc {
            tags.push(ChartClass::MonotoneNonIncreasing.tag());
        }
        if self.nondec {
            tags.push(ChartClass::MonotoneNonDecreasing.tag());
        }
        if tags.is_empty() {
            tags.push(ChartClass::Arbitrary.tag());
        }
        tags.join("+")
    }

    /// Every class the generated charts are guaranteed to satisfy.
    pub fn classes(&self) -> Vec<ChartClass> {
        let mut out = vec![ChartClass::Arbitrary];
        if self.big {
            out.push(ChartClass::Big);
        }
        if self.big || self.non_strictly_big {
            out.push(ChartClass::NonStrictlyBig);
        }
        if self.noninc {
            out.push(ChartClass::MonotoneNonIncreasing);
        }
        if self.nondec {
            out.push(ChartClass::MonotoneNonDecreasing);
        }
        out
    }
}

/// Sample `n` charts of the requested class, reproducibly: the same seed
/// always yields the same instance. Heights are uniform on the widest
/// integer range consistent with the class — for big charts the taller bar
/// is drawn from [501, 1000] and the other from [1, 1000]; non-strictly-big
/// lowers the first range to [500, 1000]; monotone classes then order the
/// pair.
pub fn generate(n: usize, spec: &ClassSpec, seed: u64) -> Result<Instance> {
    let d = Instance::DEFAULT_DENOMINATOR;
    let lo = if spec.big {
        d / 2 + 1
    } else if spec.non_strictly_big {
        d.div_ceil(2)
    } else {
        1
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut charts = Vec::with_capacity(n);
    for _ in 0..n {
        let x = rng.gen_range(lo..=d);
        let y = rng.gen_range(1..=d);
        let (mut a, mut b) = if lo > 1 && rng.gen_bool(0.5) {
            (y, x)
        } else {
            (x, y)
        };
        if (spec.noninc && a < b) || (spec.nondec && a > b) {
            std::mem::swap(&mut a, &mut b);
        }
        charts.push(Chart::new(a, b));
    }
    let name = format!("{}-n{}-s{}", spec.label(), n, seed);
    Ok(Instance::new(name, charts)?)
}
