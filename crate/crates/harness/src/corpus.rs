//! Deterministic instance corpus and seeded fuzz extensions.

use absorb_core::expr::parse_module;
use absorb_core::FiniteModule;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Size limits applied to every generated module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_ring: usize,
    pub max_module: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_ring: 24, max_module: 64 }
    }
}

impl Bounds {
    /// Parses `max-ring=24,max-module=64`; omitted keys keep their defaults.
    pub fn parse(text: &str) -> Result<Bounds> {
        let mut b = Bounds::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| HarnessError::Usage(format!("bound `{part}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| HarnessError::Usage(format!("bound `{part}` has a non-numeric value")))?;
            match key.trim() {
                "max-ring" => b.max_ring = value,
                "max-module" => b.max_module = value,
                other => return Err(HarnessError::Usage(format!("unknown bound `{other}`"))),
            }
        }
        if b.max_ring < 2 || b.max_module < 2 {
            return Err(HarnessError::Usage("bounds must be at least 2".into()));
        }
        Ok(b)
    }
}

/// A list of module expressions; order is the iteration order of every run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub entries: Vec<String>,
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (2..n).filter(move |d| n % d == 0)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn regular(n: usize) -> String {
    format!("self(zn({n}))")
}

fn cyclic(n: usize, d: usize) -> String {
    format!("cyc(zn({n}),{{{d}}})")
}

impl Corpus {
    pub fn new(entries: Vec<String>) -> Corpus {
        Corpus { entries }
    }

    /// The standard corpus: `Z_n` over itself, cyclic quotients of `Z_n`,
    /// regular modules of `Z_m x Z_n` with `mn <= 16`, free modules over
    /// `Z_p` of order at most 16, and a fixed list of mixed examples
    /// including product modules for the product theorems.
    pub fn standard(bounds: Bounds) -> Corpus {
        let mut entries = Vec::new();
        for n in 2..=bounds.max_ring {
            entries.push(regular(n));
        }
        for n in 2..=bounds.max_ring {
            for d in divisors(n) {
                entries.push(cyclic(n, d));
            }
        }
        for m in 2..=8 {
            for n in m..=8 {
                if m * n <= 16 {
                    entries.push(format!("self(prod(zn({m}),zn({n})))"));
                }
            }
        }
        for p in (2..=16).filter(|&p| is_prime(p)) {
            let mut k = 2;
            while p.pow(k as u32) <= 16 {
                entries.push(format!("freemod(zn({p}),{k})"));
                k += 1;
            }
        }
        let extras = [
            "freemod(zn(4),2)",
            "prodmod(self(zn(4)),cyc(zn(4),{2}))",
            "prodmod(cyc(zn(4),{2}),cyc(zn(4),{2}))",
            "prodmod(self(zn(8)),cyc(zn(8),{2}))",
            "prodmod(self(zn(8)),cyc(zn(8),{4}))",
            "prodmod(self(zn(9)),cyc(zn(9),{3}))",
            "prodmod(self(zn(6)),cyc(zn(6),{2}))",
            "prodmod(self(zn(6)),cyc(zn(6),{3}))",
            "prodmod(cyc(zn(8),{4}),cyc(zn(8),{2}))",
            "extprod(self(zn(2)),self(zn(2)))",
            "extprod(self(zn(4)),self(zn(2)))",
            "extprod(self(zn(2)),self(zn(4)))",
            "extprod(self(zn(8)),self(zn(2)))",
            "extprod(self(zn(4)),self(zn(4)))",
            "extprod(self(zn(4)),self(zn(3)))",
            "extprod(self(zn(9)),self(zn(2)))",
            "extprod(cyc(zn(8),{4}),self(zn(2)))",
            "extprod(self(zn(4)),cyc(zn(4),{2}))",
            "extprod(freemod(zn(2),2),self(zn(3)))",
        ];
        entries.extend(extras.iter().map(|s| s.to_string()));
        let mut corpus = Corpus { entries };
        corpus.retain_within(bounds);
        corpus
    }

    /// Adds `count` randomly drawn modules; the same seed gives the same list.
    pub fn with_fuzz(mut self, seed: u64, count: usize, bounds: Bounds) -> Corpus {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut added = 0;
        let mut attempts = 0;
        while added < count && attempts < count * 50 {
            attempts += 1;
            let n = rng.gen_range(2..=bounds.max_ring.min(24));
            let expr = match rng.gen_range(0..4) {
                0 => regular(n),
                1 => match divisors(n).collect::<Vec<_>>() {
                    ds if ds.is_empty() => regular(n),
                    ds => cyclic(n, ds[rng.gen_range(0..ds.len())]),
                },
                2 => {
                    let m = rng.gen_range(2..=4);
                    format!("extprod(self(zn({n})),self(zn({m})))")
                }
                _ => {
                    let ds: Vec<usize> = divisors(n).collect();
                    if ds.is_empty() {
                        format!("freemod(zn({n}),2)")
                    } else {
                        format!("prodmod(self(zn({n})),{})", cyclic(n, ds[rng.gen_range(0..ds.len())]))
                    }
                }
            };
            if self.entries.contains(&expr) {
                continue;
            }
            match parse_module(&expr) {
                Ok(m) if fits(&m, bounds) => {
                    self.entries.push(expr);
                    added += 1;
                }
                _ => {}
            }
        }
        self
    }

    /// Drops entries that fail to parse or exceed the bounds.
    pub fn retain_within(&mut self, bounds: Bounds) {
        self.entries.retain(|e| parse_module(e).map(|m| fits(&m, bounds)).unwrap_or(false));
    }

    /// One expression per line; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Corpus> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            absorb_core::expr::parse_module_at(line, i + 1)?;
            entries.push(line.to_string());
        }
        Ok(Corpus { entries })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(e);
            s.push('\n');
        }
        s
    }

    pub fn elaborate(&self) -> Result<Vec<FiniteModule>> {
        self.entries.iter().map(|e| parse_module(e).map_err(HarnessError::from)).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn fits(m: &FiniteModule, bounds: Bounds) -> bool {
    m.size() <= bounds.max_module && m.ring().size() <= bounds.max_ring
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_corpus_round_trips() {
        let c = Corpus::standard(Bounds::default());
        assert!(c.entries.contains(&"self(zn(24))".to_string()));
        assert!(c.entries.contains(&"cyc(zn(12),{4})".to_string()));
        for m in c.elaborate().unwrap() {
            assert_eq!(parse_module(m.name()).unwrap().size(), m.size());
        }
        assert_eq!(Corpus::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn bounds_filter_and_parse() {
        let b = Bounds::parse("max-ring=8, max-module=8").unwrap();
        let c = Corpus::standard(b);
        assert!(c.elaborate().unwrap().iter().all(|m| m.size() <= 8 && m.ring().size() <= 8));
        assert!(Bounds::parse("max-ring=x").is_err());
        assert!(Bounds::parse("size=3").is_err());
    }

    #[test]
    fn fuzz_is_seeded() {
        let b = Bounds { max_ring: 12, max_module: 32 };
        let x = Corpus::default().with_fuzz(7, 5, b);
        let y = Corpus::default().with_fuzz(7, 5, b);
        assert_eq!(x, y);
        assert_eq!(x.len(), 5);
    }
}
