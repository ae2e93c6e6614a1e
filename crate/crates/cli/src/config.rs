//! Settings resolved from flags, then `SNARKLAB_*` variables, then a
//! `key = value` file, then defaults.

use crate::fail::Failure;
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Default)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
    origin: String,
}

impl ConfigFile {
    pub fn parse(text: &str, origin: &str) -> Result<Self, Failure> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                Failure::Usage(format!("{origin}:{}: expected key = value", i + 1))
            })?;
            values.insert(k.trim().replace('-', "_"), v.trim().to_string());
        }
        Ok(ConfigFile {
            values,
            origin: origin.to_string(),
        })
    }

    /// Reads `path` if given, else `SNARKLAB_CONFIG`, else nothing.
    pub fn load(path: Option<&Path>) -> Result<Self, Failure> {
        let path = match path {
            Some(p) => p.to_path_buf(),
            None => match std::env::var_os("SNARKLAB_CONFIG") {
                Some(p) => p.into(),
                None => return Ok(ConfigFile::default()),
            },
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Failure::Io(format!("config {}: {e}", path.display())))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// `flag`, else `SNARKLAB_<KEY>`, else the file's `key`.
    pub fn get<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, Failure>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        let var = format!("SNARKLAB_{}", key.to_uppercase());
        if let Ok(v) = std::env::var(&var) {
            return v
                .parse()
                .map(Some)
                .map_err(|e| Failure::Usage(format!("{var}={v:?}: {e}")));
        }
        match self.values.get(key) {
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| Failure::Usage(format!("{}: {key} = {v:?}: {e}", self.origin))),
            None => Ok(None),
        }
    }

    pub fn get_or<T: FromStr>(&self, flag: Option<T>, key: &str, default: T) -> Result<T, Failure>
    where
        T::Err: std::fmt::Display,
    {
        Ok(self.get(flag, key)?.unwrap_or(default))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_values_and_flags() {
        let c = ConfigFile::parse("# comment\nmax-zeta = 5\nseed=9\n", "test").unwrap();
        assert_eq!(c.get_or::<usize>(None, "max_zeta", 7).unwrap(), 5);
        assert_eq!(c.get_or::<usize>(Some(6), "max_zeta", 7).unwrap(), 6);
        assert_eq!(c.get_or::<u64>(None, "absent_key", 1).unwrap(), 1);
        assert!(c.get::<usize>(None, "seed").unwrap() == Some(9));
        assert!(ConfigFile::parse("oops", "test").is_err());
    }
}
