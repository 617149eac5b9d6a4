//! Input parsing and atomic output.
//!
//! Group file: blank lines and `#` comments are skipped; the first line is
//! `degree N`, every later line is one generator in cycle notation. A file
//! with no generators denotes the trivial group.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use pgv_core::{PermGroup, Permutation};
use tempfile::NamedTempFile;

use crate::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_group(text: &str, origin: &str) -> Result<PermGroup, CliError> {
    let at = |line: usize, msg: String| CliError::Input(format!("{origin}:{line}: {msg}"));
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| CliError::Input(format!("{origin}: empty group file")))?;
    let degree = header
        .strip_prefix("degree")
        .and_then(|rest| rest.trim().parse::<usize>().ok())
        .filter(|&d| d > 0)
        .ok_or_else(|| at(line, format!("expected `degree N`, found {header:?}")))?;
    let gens = lines
        .map(|(line, text)| Permutation::parse_cycles(text, degree).map_err(|e| at(line, e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Ok(PermGroup::trivial(degree));
    }
    Ok(PermGroup::from_generators(gens)?)
}

pub fn read_group_file(path: &Path) -> Result<PermGroup, CliError> {
    parse_group(&read_text(path)?, &path.display().to_string())
}

/// Blocks as 0-based vertex lists, one block per line.
pub fn read_blocks(path: &Path) -> Result<Vec<Vec<u32>>, CliError> {
    let text = read_text(path)?;
    content_lines(&text)
        .map(|(line, l)| {
            l.split_whitespace()
                .map(|tok| match tok.parse::<u32>() {
                    Ok(v) if v > 0 => Ok(v - 1),
                    _ => Err(CliError::Input(format!(
                        "{}:{line}: expected a positive vertex number, found {tok:?}",
                        path.display()
                    ))),
                })
                .collect()
        })
        .collect()
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(
    path: &Path,
    fill: impl FnOnce(&mut BufWriter<&mut NamedTempFile>) -> std::io::Result<()>,
) -> Result<(), CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(io_err)?;
    // temporary files are created owner-only; outputs are ordinary files
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))
            .map_err(io_err)?;
    }
    {
        let mut w = BufWriter::new(&mut tmp);
        fill(&mut w).map_err(io_err)?;
        w.flush().map_err(io_err)?;
    }
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}
