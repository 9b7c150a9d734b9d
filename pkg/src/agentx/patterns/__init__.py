"""Workflow patterns: the stage/plan/execute engine plus the comparison baselines."""

PATTERN_AGENTX = "agentx"
PATTERN_REACT = "react"
PATTERN_ORCHESTRATOR = "orchestrator"

PATTERNS = (PATTERN_AGENTX, PATTERN_REACT, PATTERN_ORCHESTRATOR)
