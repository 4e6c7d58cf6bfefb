//! On-disk cache of enumeration levels, keyed by class tag and order.
//!
//! Each level is a text file holding one canonical form (hex) per line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use super::enumerate::{extend_level, Class, Enumerated};
use super::OracleError;
use crate::graph::{canonical_labeling, CanonicalForm, SmallGraph};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "PLANAR_TURAN_CACHE";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// The directory named by `PLANAR_TURAN_CACHE`, if set.
    pub fn from_env() -> Option<Self> {
        std::env::var_os(CACHE_ENV).map(Cache::new)
    }

    fn path(&self, tag: &str, n: usize) -> PathBuf {
        self.dir.join(format!("{tag}-n{n}.txt"))
    }

    pub fn load(&self, tag: &str, n: usize) -> Result<Option<Vec<Enumerated>>, OracleError> {
        let path = self.path(tag, n);
        if !path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&path)?;
        let mut level = Vec::new();
        for line in text.lines().filter(|l| !l.is_empty()) {
            let form = CanonicalForm::from_hex(line)
                .ok_or_else(|| OracleError::Cache(format!("bad entry `{line}` in {}", path.display())))?;
            if form.vertex_count() != n {
                return Err(OracleError::Cache(format!("order mismatch in {}", path.display())));
            }
            level.push(Enumerated { form });
        }
        Ok(Some(level))
    }

    /// Writes through a temporary file so an interrupted run never leaves a
    /// truncated level behind.
    pub fn store(&self, tag: &str, n: usize, level: &[Enumerated]) -> Result<(), OracleError> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(tag, n);
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp)?;
        for e in level {
            writeln!(f, "{}", e.form.to_hex())?;
        }
        f.sync_all()?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// Enumerates the class level by level, storing each level. With
    /// `resume`, starts from the largest stored level not above `n`.
    pub fn enumerate(
        &self,
        tag: &str,
        n: usize,
        class: &Class<'_>,
        resume: bool,
    ) -> Result<Vec<Enumerated>, OracleError> {
        let mut start = None;
        if resume {
            for k in (1..=n).rev() {
                if let Some(level) = self.load(tag, k)? {
                    start = Some((k, level));
                    break;
                }
            }
        }
        let (mut k, mut level) = start.unwrap_or_else(|| {
            let form = canonical_labeling(&SmallGraph::new(n.min(1)), None).form;
            (n.min(1), vec![Enumerated { form }])
        });
        while k < n {
            level = extend_level(&level, class);
            k += 1;
            self.store(tag, k, &level)?;
        }
        Ok(level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_class;

    #[test]
    fn resume_matches_fresh_run() {
        let dir = std::env::temp_dir().join(format!("planar-turan-cache-{}", std::process::id()));
        let cache = Cache::new(&dir);
        let class = Class::all();
        let first = cache.enumerate("all", 5, &class, false).unwrap();
        assert_eq!(cache.load("all", 4).unwrap().unwrap().len(), 11);
        let resumed = cache.enumerate("all", 6, &class, true).unwrap();
        assert_eq!(first, enumerate_class(5, &class));
        assert_eq!(resumed, enumerate_class(6, &class));
        fs::remove_dir_all(dir).unwrap();
    }
}
