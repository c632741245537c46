from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    name: str  # 检查项名称
    passed: bool  # 是否通过
    witness: str = ""  # 失败时的反例（或通过时的统计信息）


@dataclass
class VerificationReport:
    """
    校验报告：overall为全部检查项结果的合取（无检查项时为真）
    """

    checks: list[CheckResult] = field(default_factory=lambda: [])

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    def add(self, name: str, passed: bool, witness: str = "") -> "VerificationReport":
        self.checks.append(CheckResult(name, passed, witness))
        return self

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(f"报告中不存在检查项 '{name}'")

    def __contains__(self, name: str) -> bool:
        return any(check.name == name for check in self.checks)

    def render_lines(self) -> str:
        """机器可读格式：每行一个检查项 CHECK <name> PASS/FAIL <witness>"""
        lines = []
        for check in self.checks:
            line = f"CHECK {check.name} {'PASS' if check.passed else 'FAIL'}"
            if check.witness:
                line += f" {check.witness}"
            lines.append(line)
        return "\n".join(lines) + "\n" if lines else ""

    def render_text(self) -> str:
        """人类可读格式"""
        lines = []
        for check in self.checks:
            mark = "通过" if check.passed else "失败"
            lines.append(f"[{mark}] {check.name}" + (f": {check.witness}" if check.witness else ""))
        passed = sum(check.passed for check in self.checks)
        lines.append(f"共 {len(self.checks)} 项，通过 {passed} 项，结论: {'通过' if self.overall else '失败'}")
        return "\n".join(lines) + "\n"
