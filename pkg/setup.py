from setuptools import setup

setup(
    name="graphent",
    include_package_data=True,
    long_description_content_type="text/markdown",
    install_requires=[
        "numpy>=1.22",
        "networkx>=2.8",
        "psutil>=5.6.6",
    ],
    extras_require={
        "dev": [
            "pytest",
            "hypothesis",
        ]
    }
)
