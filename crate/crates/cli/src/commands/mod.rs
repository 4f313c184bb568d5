pub mod analyze;
pub mod estimator;
pub mod run;
pub mod sweep;

use std::path::Path;

use crate::error::Result;

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, contents)?;
    Ok(())
}
