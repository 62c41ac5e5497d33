//! JSON encoding of spectra and the command-line entry point.

use symspec::json::{decode_spectrum, encode_spectrum, NoNames};
use symspec::spectra::free_f;
use symspec::sset::circle;

fn main() -> symspec::Result<()> {
    let f = free_f(1, &circle(), 2)?;
    let text = serde_json::to_string_pretty(&encode_spectrum(f.spectrum())?)?;
    println!("{} bytes of JSON", text.len());
    let back = decode_spectrum(&serde_json::from_str(&text)?, &NoNames)?.spectrum;
    println!("reloaded level 2 equal: {}", **back.space(2) == **f.spectrum().space(2));

    let code = symspec::cli::run(["symspec", "validate", "sphere", "--bound", "3", "--format", "human"]);
    println!("exit code {code}");
    Ok(())
}
