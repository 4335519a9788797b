from setuptools import setup, find_packages

setup(
    name="fracwave",
    version="0.1",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    install_requires=["numpy", "scipy", "mpmath"],
    entry_points={"console_scripts": ["fracwave=cli.app.main:main"]},
)
