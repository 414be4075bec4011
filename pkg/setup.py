from setuptools import find_packages, setup

setup(
    name='lagrangian-cones',
    packages=find_packages(exclude=['tests', 'tests.*']),
    package_data={'src.data': ['paper_data.yaml']},
    version='0.1.0',
    description='Lagrangian highest weight orbits and homogeneous special '
                'pseudo-Kaehler manifolds, re-derived in exact arithmetic',
    author='st',
    license='MIT',
    python_requires='>=3.10',
    install_requires=[
        'click<8.2',
        'networkx',
        'numpy',
        'pydantic>=2',
        'PyYAML',
        'sympy',
        'tabulate',
    ],
    entry_points={
        'console_scripts': ['lagrangian-cones = src.cli.main:main'],
    },
)
