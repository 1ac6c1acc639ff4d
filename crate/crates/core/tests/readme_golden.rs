use std::path::Path;
use std::process::Command;

fn sessions() -> Vec<(String, String)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let readme = std::fs::read_to_string(root.join("README.md")).unwrap();
    let mut out: Vec<(String, String)> = Vec::new();
    let mut in_block = false;
    for line in readme.lines() {
        if line.starts_with("```") {
            in_block = line == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ hqforms ") {
            out.push((cmd.to_string(), String::new()));
        } else if let Some((_, expected)) = out.last_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_sessions_match() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let sessions = sessions();
    assert!(sessions.len() >= 8);
    for (cmd, expected) in sessions {
        let out = Command::new(env!("CARGO_BIN_EXE_hqforms"))
            .args(cmd.split_whitespace())
            .current_dir(&root)
            .output()
            .unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "hqforms {cmd}");
    }
}
