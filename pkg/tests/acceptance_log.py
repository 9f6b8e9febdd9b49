# criterion id -> (passed, detail); filled by test_acceptance, printed by conftest
RESULTS: dict[str, tuple[bool, str]] = {}
