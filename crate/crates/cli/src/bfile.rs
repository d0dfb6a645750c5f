//! OEIS b-file parsing and prefix matching.
//!
//! A b-file is a flat text file of `index value` lines; `#` starts a comment
//! and blank lines are ignored. Because OEIS offsets vary, a locally
//! computed prefix s_1..s_N matches the file when some constant shift d in
//! -3..=3 makes file[n + d] = s_n for every n.

use std::collections::BTreeMap;

/// Parsed b-file entries in file order.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, i128)>, String> {
    let mut entries = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val)) = (parts.next(), parts.next()) else {
            return Err(format!("line {}: expected `index value`", lineno + 1));
        };
        if parts.next().is_some() {
            return Err(format!("line {}: trailing fields", lineno + 1));
        }
        let idx: i64 = idx
            .parse()
            .map_err(|_| format!("line {}: bad index", lineno + 1))?;
        let val: i128 = val
            .parse()
            .map_err(|_| format!("line {}: bad value", lineno + 1))?;
        entries.push((idx, val));
    }
    Ok(entries)
}

/// Searches shifts -3..=3 for a full-prefix match of `local` (indexed from
/// n = 1) against the b-file entries. Returns the first matching shift.
pub fn find_shift(local: &[i128], entries: &[(i64, i128)]) -> Option<i64> {
    let file: BTreeMap<i64, i128> = entries.iter().copied().collect();
    (-3..=3).find(|&shift| {
        local
            .iter()
            .enumerate()
            .all(|(i, &s)| file.get(&(i as i64 + 1 + shift)) == Some(&s))
    })
}
