def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number][1])
