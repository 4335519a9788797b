"""Shared tests package.""" 