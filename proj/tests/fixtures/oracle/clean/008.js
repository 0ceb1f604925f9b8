function greet(name) {
  return 'Hello, ' + name + '!';
}
console.log(greet('robot'));
console.log(greet('') + greet('x'));
console.log(hoisted());
function hoisted() {
  return 'hoisted works';
}
