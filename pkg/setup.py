from setuptools import setup, find_packages

setup(
    name="kirchhoff-bounds",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        "fastapi",
        "pydantic",
        "pydantic-settings",
        "langgraph",
        "PyYAML",
        "numpy",
        "networkx",
    ],
    package_data={"": ["data/*.yaml"]},
    entry_points={"console_scripts": ["kirchhoff=api.cli:main"]},
)
