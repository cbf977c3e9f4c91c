"""
配置校验报告
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class ValidationReport:
    """
    配置校验结果，违规项不抛异常，只在报告中列出
    """
    violations: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    effective: Dict[str, Any] = field(default_factory=dict)  # 解析后的扁平配置

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        """
        渲染为便于打印的文本
        """
        lines = [f"{key} = {value}" for key, value in sorted(self.effective.items())]
        for warning in self.warnings:
            lines.append(f"WARNING: {warning}")
        for violation in self.violations:
            lines.append(f"VIOLATION: {violation}")
        lines.append("OK" if self.ok else f"{len(self.violations)} violation(s)")
        return "\n".join(lines)
