//! Golden outputs for the bundled fixtures. Each golden is the pretty JSON
//! of one command run with fixture paths relative to the fixture directory.

use std::path::{Path, PathBuf};

use rectilt_core::{Error, Result};

/// `(file name, arguments after the program name)`; `{}` stands for the
/// fixture directory.
pub const GOLDENS: &[(&str, &[&str])] = &[
    ("roster_lambda.json", &["ar", "roster", "{}/lambda.json"]),
    (
        "exactness_lambda.json",
        &["rec", "check", "{}/lambda.json", "--outer", "3,4,5"],
    ),
    (
        "exactness_product.json",
        &["rec", "check", "{}/product.json", "--outer", "3,4,5"],
    ),
    (
        "case1_glue.json",
        &[
            "rec",
            "glue",
            "{}/lambda.json",
            "--outer",
            "3,4,5",
            "--inner-tilting",
            "P(1)+S(1)",
            "--outer-tilting",
            "P(5)+P(4)+P(3)",
        ],
    ),
    (
        "case2_glue.json",
        &[
            "rec",
            "glue",
            "{}/lambda.json",
            "--outer",
            "3,4,5",
            "--inner-tilting",
            "P(1)+S(1)",
            "--outer-tilting",
            "P(3)+P(4)+S(4)",
        ],
    ),
    (
        "case3_restrict.json",
        &[
            "rec",
            "restrict",
            "{}/lambda.json",
            "--outer",
            "3,4,5",
            "--tilting",
            "T_case3",
            "--side",
            "right",
        ],
    ),
    (
        "case4_restrict.json",
        &[
            "rec",
            "restrict",
            "{}/lambda.json",
            "--outer",
            "3,4,5",
            "--tilting",
            "T_case4",
            "--side",
            "right",
        ],
    ),
    (
        "product_glue.json",
        &[
            "rec",
            "glue",
            "{}/product.json",
            "--outer",
            "3,4,5",
            "--inner-tilting",
            "P(1)+P(2)",
            "--outer-tilting",
            "P(3)+P(4)+P(5)",
        ],
    ),
];

/// Runs every golden command; returns `(file name, exit code, rendered JSON)`.
pub fn render(fixtures: &Path, seed: u64) -> Vec<(String, i32, String)> {
    let dir = fixtures.display().to_string();
    let seed = seed.to_string();
    GOLDENS
        .iter()
        .map(|(name, args)| {
            let mut argv = vec!["rectilt".to_string(), "--seed".to_string(), seed.clone()];
            argv.extend(args.iter().map(|a| a.replace("{}", &dir)));
            let out = crate::run_from(argv);
            (name.to_string(), out.code, out.rendered())
        })
        .collect()
}

pub fn regenerate(fixtures: &Path, seed: u64) -> Result<Vec<PathBuf>> {
    let dir = fixtures.join("golden");
    std::fs::create_dir_all(&dir)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (name, code, text) in render(fixtures, seed) {
        if code != 0 {
            return Err(Error::Internal(format!(
                "golden command for {name} exited with {code}: {text}"
            )));
        }
        let path = dir.join(&name);
        std::fs::write(&path, text)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        written.push(path);
    }
    Ok(written)
}
