use std::sync::atomic::{AtomicBool, Ordering};

static CANCEL: AtomicBool = AtomicBool::new(false);

fn main() {
    let _ = ctrlc::set_handler(|| CANCEL.store(true, Ordering::Relaxed));
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = comaximal::cli::run(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
        Some(&CANCEL),
    );
    std::process::exit(code);
}
