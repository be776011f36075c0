"""Pydantic schemas - run configs and report files."""
