//! `key = value` config files, spliced into the argument list after the
//! subcommand so that clap validates them like flags.
//!
//! Precedence, highest first: command line, `CYCLESPAN_*` environment
//! variables, config file.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};

pub const ENV_PREFIX: &str = "CYCLESPAN_";

/// Parsed config entries in file order.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key = value, found {line:?}", lineno + 1);
        };
        let key = key.trim().replace('_', "-");
        if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || c == '-') {
            bail!("config line {}: invalid key {key:?}", lineno + 1);
        }
        out.push((key, value.trim().to_string()));
    }
    Ok(out)
}

pub fn env_name(key: &str) -> String {
    format!("{ENV_PREFIX}{}", key.to_ascii_uppercase().replace('-', "_"))
}

/// Removes `--config PATH` from `args` and returns the path, falling back to
/// `CYCLESPAN_CONFIG`.
fn take_config_path(args: &mut Vec<String>) -> Result<Option<String>> {
    let mut i = 0;
    while i < args.len() {
        if args[i] == "--config" {
            if i + 1 >= args.len() {
                bail!("--config needs a path");
            }
            let path = args.remove(i + 1);
            args.remove(i);
            return Ok(Some(path));
        }
        if let Some(path) = args[i].strip_prefix("--config=") {
            let path = path.to_string();
            args.remove(i);
            return Ok(Some(path));
        }
        i += 1;
    }
    Ok(std::env::var(env_name("config")).ok())
}

/// Flags already given on the command line, by long name.
fn given_flags(args: &[String]) -> BTreeSet<String> {
    args.iter()
        .filter_map(|a| a.strip_prefix("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_string())
        .collect()
}

/// Splices config entries into `args` right after the subcommand name.
pub fn apply_config(mut args: Vec<String>, subcommands: &[&str]) -> Result<Vec<String>> {
    let Some(path) = take_config_path(&mut args)? else {
        return Ok(args);
    };
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading config {path}"))?;
    let entries = parse_config(&text)?;
    let Some(pos) = args.iter().position(|a| subcommands.contains(&a.as_str())) else {
        return Ok(args);
    };
    let given = given_flags(&args);
    let mut extra = Vec::new();
    for (key, value) in entries {
        if given.contains(&key) || std::env::var_os(env_name(&key)).is_some() {
            continue;
        }
        match value.as_str() {
            "true" => extra.push(format!("--{key}")),
            "false" => {}
            _ => {
                extra.push(format!("--{key}"));
                extra.extend(value.split_whitespace().map(str::to_string));
            }
        }
    }
    args.splice(pos + 1..pos + 1, extra);
    Ok(args)
}
