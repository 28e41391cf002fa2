//! Parsing of angles given in radians, with `pi` literals.

use std::f64::consts::PI;

use crate::error::CliError;

/// Accepts `0.5`, `pi`, `-pi`, `pi/2`, `3pi/4`, `-3*pi/4`, `2π/3`.
pub fn parse_angle(text: &str) -> Result<f64, CliError> {
    let bad = || CliError::Usage(format!("cannot parse angle '{text}'"));
    let cleaned: String = text
        .trim()
        .to_lowercase()
        .replace('π', "pi")
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect();
    let Some(pos) = cleaned.find("pi") else {
        let value: f64 = cleaned.parse().map_err(|_| bad())?;
        return if value.is_finite() {
            Ok(value)
        } else {
            Err(bad())
        };
    };
    let head = cleaned[..pos].trim_end_matches('*');
    let tail = &cleaned[pos + 2..];
    let coefficient = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let denominator = match tail {
        "" => 1.0,
        t => t
            .strip_prefix('/')
            .ok_or_else(bad)?
            .parse::<f64>()
            .map_err(|_| bad())?,
    };
    if denominator == 0.0 || !coefficient.is_finite() || !denominator.is_finite() {
        return Err(bad());
    }
    Ok(coefficient * PI / denominator)
}
