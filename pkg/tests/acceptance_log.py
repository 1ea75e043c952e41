ACCEPTANCE_LINES: list[str] = []
