# SPDX-License-Identifier: MIT
"""Utility modules for exporting results."""
