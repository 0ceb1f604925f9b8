function getX() {
  return 4;
}
console.log(getX > 0, getX < 0, getX >= 0, getX + 1, getX * 1);
console.log('%s', getX);
console.log('' + getX);
