let label = "cell" * 2;
console.log(label);
